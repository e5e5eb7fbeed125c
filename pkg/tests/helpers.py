"""Random diagram generators shared by the test modules."""

from __future__ import annotations

import random

from skein_s1s2.diagrams import SliceWord


def random_slice_word(rng: random.Random, max_crossings: int = 8, max_strands: int = 4,
                      relative: bool = False, attempts: int = 1000) -> SliceWord:
    """A random closing slice word mixing crossings, caps and cups of both orientations."""
    for _ in range(attempts):
        k = rng.randint(1, max_strands)
        orient = [rng.choice("du") for _ in range(k)]
        if relative:
            orient[-1] = "d"
        prof = list(orient)
        slices = []
        crossings = rng.randint(0, max_crossings)
        made = 0
        steps = 0
        while made < crossings and steps < 4 * max_crossings + 8:
            steps += 1
            r = rng.random()
            top = len(prof) - (1 if relative else 0)
            if r < 0.7 and top >= 2:
                i = rng.randrange(top - 1)
                slices.append(("X", i, rng.choice("LR")))
                prof[i], prof[i + 1] = prof[i + 1], prof[i]
                made += 1
            elif r < 0.85 and top >= 2:
                i = rng.randrange(top - 1)
                if prof[i] != prof[i + 1]:
                    slices.append(("cap", i))
                    del prof[i:i + 2]
            elif len(prof) < max_strands + 2:
                i = rng.randrange(top + 1)
                o = rng.choice("du")
                slices.append(("cup", i, o))
                prof[i:i] = [o, "u" if o == "d" else "d"]
        if prof == orient:
            return SliceWord(tuple(orient), tuple(slices), relative)
    raise RuntimeError("no closing word found")
