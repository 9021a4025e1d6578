#! /usr/bin/env python

from fractions import Fraction

import cartanhartogs as ch


def test_rootcount():
    """
    Count roots of P_mu^m in Re eta > 1/2 between consecutive thresholds
    of the four-dimensional domains.

    :return: None
    """
    for name in ("I_{1,4}", "IV_4", "I_{2,2}"):
        spec = ch.catalog_lookup(name)
        for m in range(1, 8):
            report = ch.threshold(spec, m)
            first, second = report.mu_m_1, report.mu_m_2
            samples = [(first.value / 2, 0)]
            if second is None:
                samples.append((first.value + 5, 1))
            else:
                samples.append(((first.value + second.value) / 2, 1))
                samples.append((second.value + Fraction(5, 2), 2))
            for mu, expected in samples:
                count = ch.halfplane_root_count(spec, m, mu)
                print(f"{name:8s} m = {m}  mu = {float(mu):10.5f}  "
                      f"count = {count.count}")
                assert count.count == expected
                assert count.all_real
                assert all(abs(r.imag) < 1.0e-9 for r in count.roots)


def main():
    test_rootcount()


if __name__ == "__main__":
    main()
