#! /usr/bin/env python

import cartanhartogs as ch


def test_table():
    """
    Reproduce the threshold table of the domains of dimension <= 4 with
    deviations from the printed values.

    :return: None
    """
    table = ch.ThresholdTable()
    timer = ch.Timer()
    timer.tic("table")
    rows = table.run()
    timer.toc("table")
    table.report(rows)
    timer.report_total_time()
    finite = [row for row in rows if row.printed is not None]
    assert len(finite) == 30
    assert table.all_match(rows)
    assert all(row.closed_form_ok for row in rows
               if row.closed_form is not None)
    with open("table.csv", "w") as f:
        f.write(table.to_csv(rows))


def test_m_omega():
    """
    Compare m_Omega with the published values.

    :return: None
    """
    for name in ("I_{1,1}", "I_{1,2}", "I_{1,3}", "IV_3", "III_2",
                 "I_{1,4}", "IV_4", "I_{2,2}"):
        spec = ch.catalog_lookup(name)
        report = ch.m_omega(spec)
        print(f"{name:8s} m_Omega = {report.m_omega} "
              f"(certificate: {report.certificate})")
        assert report.m_omega == ch.published_m_omega(spec)


def main():
    test_table()
    test_m_omega()


if __name__ == "__main__":
    main()
