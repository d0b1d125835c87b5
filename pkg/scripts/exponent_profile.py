#!/usr/bin/env python3
"""Scan a modulus range and print the running maximum of log P / log q.

Usage: python scripts/exponent_profile.py Q_MAX [JOBS] > profile.csv
"""
import os
import sys

from linnik.scanner import ScanConfig, iter_scan


def main():
    q_max = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    jobs = int(sys.argv[2]) if len(sys.argv) > 2 else (os.cpu_count() or 1)
    best = 0.0
    print("q,least_prime,exponent,running_max,status")
    for rec in iter_scan(ScanConfig(3, q_max), jobs):
        if rec.exponent is None:
            print(f"{rec.q},,,{best:.6f},{rec.status}")
            continue
        best = max(best, rec.exponent)
        print(f"{rec.q},{rec.least_prime},{rec.exponent:.6f},{best:.6f},{rec.status}")


if __name__ == "__main__":
    main()
