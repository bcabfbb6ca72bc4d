#!/usr/bin/env python3
"""Regenerates the golden files under this directory.

Independent of the Rust crate: partition numbers from the pentagonal
recurrence, moment sequences from the theta factors written out directly,
all with Python integers.
"""
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def partition_numbers(order):
    p = [1] + [0] * order
    for n in range(1, order + 1):
        acc, k = 0, 1
        while k * (3 * k - 1) // 2 <= n:
            sign = 1 if k % 2 else -1
            acc += sign * p[n - k * (3 * k - 1) // 2]
            if k * (3 * k + 1) // 2 <= n:
                acc += sign * p[n - k * (3 * k + 1) // 2]
            k += 1
        p[n] = acc
    return p


def multiply(theta, p, order):
    out = [0] * (order + 1)
    for e, c in theta.items():
        for i in range(e, order + 1):
            out[i] += c * p[i - e]
    return out


def sigma(s, M, A, r, p, order):
    theta, n = {}, 0
    while s * (M * n + A) * (M * n + A - 1) // 2 <= order:
        m = M * n + A
        e = s * m * (m - 1) // 2
        theta[e] = theta.get(e, 0) + m ** r
        theta[e + s * m] = theta.get(e + s * m, 0) - m ** r
        n += 1
    return multiply({e: c for e, c in theta.items() if e <= order}, p, order)


def varsigma(s, M, A, r, p, order):
    theta, n = {0: A ** r}, 0
    while s * (M * n * (n + 1) // 2 + A * (n + 1)) <= order:
        e = s * (M * n * (n + 1) // 2 + A * (n + 1))
        theta[e] = theta.get(e, 0) + (M * (n + 1) + A) ** r - (M * n + A) ** r
        n += 1
    return multiply(theta, p, order)


def nondecreasing_from(seq):
    n0 = len(seq) - 1
    while n0 > 0 and seq[n0 - 1] <= seq[n0]:
        n0 -= 1
    return n0


def main():
    order = 2000
    p = partition_numbers(order)
    rows = []
    for M in range(1, 5):
        for A in range(1, M + 1):
            for s in range(1, 4):
                for r in range(3):
                    rows.append({"s": s, "M": M, "A": A, "r": r,
                                 "n0": nondecreasing_from(sigma(s, M, A, r, p, order))})
    with open(os.path.join(HERE, "sigma_monotone_from.json"), "w") as f:
        json.dump({"max_n": order, "sequences": rows}, f, indent=1)
        f.write("\n")

    lo, hi = 26, 1000
    violations = [n for n in range(lo, hi) if p[n] * p[n] <= p[n - 1] * p[n + 1]]
    assert not violations
    report = {
        "scan": "log_concavity",
        "params": {"kind": "varsigma", "s": 1, "M": 1, "A": 1, "r": 0},
        "range": [lo, hi],
        "violations": [],
        "equalities": [],
        "ordering": [],
        "stabilized_at": lo,
    }
    with open(os.path.join(HERE, "logconcave_varsigma_r0.json"), "w") as f:
        json.dump(report, f, indent=1)
        f.write("\n")

    s, M, r, lo, hi = 1, 3, 0, 1, 100
    seqs = [varsigma(s, M, A, r, p, hi) for A in range(1, M + 1)]
    ordering = []
    for n in range(lo, hi + 1):
        vals = [seq[n] for seq in seqs]
        perm = sorted(range(1, M + 1), key=lambda a: vals[a - 1])
        ties = [vals[a - 1] == vals[b - 1] for a, b in zip(perm, perm[1:])]
        ordering.append({"n": n, "perm": perm, "ties": ties})
    report = {
        "scan": "bias",
        "params": {"kind": "varsigma", "s": s, "M": M, "r": r},
        "range": [lo, hi],
        "violations": [],
        "equalities": [],
        "ordering": ordering,
        "stabilized_at": lo,
    }
    with open(os.path.join(HERE, "bias_varsigma_r0.json"), "w") as f:
        json.dump(report, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
