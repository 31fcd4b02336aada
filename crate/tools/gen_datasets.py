"""Regenerate the bundled surname datasets.

Needs the `faker` package (only for its frequency-ordered surname tables).
Output is deterministic for a given faker release and seed.
"""
import random
import sys
from pathlib import Path

from faker.providers.person.en_GB import Provider as GB
from faker.providers.person.en_IE import Provider as IE
from faker.providers.person.en_US import Provider as US
from faker.providers.person.fr_FR import Provider as FR

OUT = Path(__file__).resolve().parent.parent / "crates" / "core" / "data"


def weighted(table):
    if isinstance(table, dict):
        return list(table.keys()), [float(w) for w in table.values()]
    names = list(table)
    return names, [1.0] * len(names)


def sample_distinct(rng, names, weights, k):
    picked, seen = [], set()
    while len(picked) < k:
        name = rng.choices(names, weights)[0]
        if name not in seen:
            seen.add(name)
            picked.append(name)
    return picked


def write(name, header, rows):
    with open(OUT / f"{name}.txt", "w", encoding="utf-8") as f:
        f.write(f"# {header}\n")
        for row in rows:
            f.write(row + "\n")


def main(seed=2007):
    rng = random.Random(seed)

    names, weights = weighted(US.last_names)
    reps = sample_distinct(rng, names, weights, 394)
    write("representatives", "394 surnames drawn without replacement from a US surname frequency table.", reps)

    pool = {}
    for table, scale in ((GB.last_names, 1.0), (IE.last_names, 1.0), (US.last_names, 1.0)):
        names, weights = weighted(table)
        total = sum(weights)
        for n, w in zip(names, weights):
            pool[n] = pool.get(n, 0.0) + scale * w / total
    for n in FR.last_names:
        pool[n] = pool.get(n, 0.0) + 0.5 / len(FR.last_names)
    names, weights = list(pool), list(pool.values())
    grads = rng.choices(names, weights, k=1369)
    write("graduates", "1369 surnames drawn with replacement from mixed English, Irish, US and French tables.", grads)


if __name__ == "__main__":
    sys.exit(main())
