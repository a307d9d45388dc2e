#!/usr/bin/env python3
"""Exhaustive sweep comparing the Hecke transfer counts with brute force.

Enumerates every positive word up to the configured size, evaluates the
transfer-matrix point count at each prime and checks it against direct
enumeration over the prime field, for both the identity and the longest
permutation targets.  Slower but wider than the packaged acceptance sweep.
"""

import argparse
import itertools
import time
from dataclasses import dataclass, field

from torushom.braid import BraidWord, identity_permutation, longest_permutation
from torushom.hecke import _enumerate_counts, point_count


@dataclass
class SweepConfig:
    max_strands: int = 3
    max_len: int = 7
    primes: tuple = (2, 3, 5)
    threads: int = 1
    report_every: int = 50


def sweep(cfg: SweepConfig) -> int:
    mismatches = 0
    words = 0
    start = time.perf_counter()
    for n in range(2, cfg.max_strands + 1):
        for ell in range(0, cfg.max_len + 1):
            for letters in itertools.product(range(1, n), repeat=ell):
                b = BraidWord.make(n, list(letters))
                words += 1
                targets = (identity_permutation(n), longest_permutation(n))
                expected = [point_count(b, t) for t in targets]
                for p in cfg.primes:
                    got = _enumerate_counts(b, targets, p, cfg.threads)
                    for t, poly, count in zip(targets, expected, got):
                        if poly.evaluate(p) != count:
                            mismatches += 1
                            print(f"MISMATCH {b.word_str()!r} strands={n} "
                                  f"target={t} p={p}: hecke {poly.evaluate(p)} "
                                  f"brute {count}")
                if words % cfg.report_every == 0:
                    rate = words / (time.perf_counter() - start)
                    print(f"... {words} words checked ({rate:.0f}/s)")
    elapsed = time.perf_counter() - start
    print(f"{words} words, {len(cfg.primes)} primes, 2 targets: "
          f"{mismatches} mismatches in {elapsed:.1f}s")
    return mismatches


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-strands", type=int, default=3)
    parser.add_argument("--max-len", type=int, default=7)
    parser.add_argument("--primes", default="2,3,5")
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()
    cfg = SweepConfig(
        max_strands=args.max_strands,
        max_len=args.max_len,
        primes=tuple(int(p) for p in args.primes.split(",")),
        threads=args.threads,
    )
    raise SystemExit(1 if sweep(cfg) else 0)


if __name__ == "__main__":
    main()
