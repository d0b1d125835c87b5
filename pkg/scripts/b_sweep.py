#!/usr/bin/env python3
"""How far can b be pushed? Runs the exact lemma certificate for b on a grid.

Usage: python scripts/b_sweep.py [b_min] [b_max] [steps]
"""
import sys
from fractions import Fraction

from linnik.lemma import LemmaParameters, verify_lemma


def main():
    lo = Fraction(sys.argv[1]) if len(sys.argv) > 1 else Fraction("1.0")
    hi = Fraction(sys.argv[2]) if len(sys.argv) > 2 else Fraction("1.25")
    steps = int(sys.argv[3]) if len(sys.argv) > 3 else 25
    print("b,verdict,discriminant_sign,s_high,epsilon_max")
    for k in range(steps + 1):
        b = lo + (hi - lo) * k / steps
        r = verify_lemma(LemmaParameters.from_b(b))
        print(f"{float(b):.4f},{r.verdict},{r.discriminant_sign},{r.s_high},{r.epsilon_max}")


if __name__ == "__main__":
    main()
