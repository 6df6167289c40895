"""Release criteria, one pytest line per numbered check.

Each test delegates to the acceptance registry and prints the one-line
verdict so `pytest -v` doubles as the release report.  The checks seed
their own corpora; nothing here depends on test ordering.
"""

from sturmia import acceptance


def _run(number: int) -> None:
    result = acceptance.run_check(number)
    print(result.line())
    assert result.passed, result.line()


def test_criterion_01_ostrowski_round_trip():
    _run(1)


def test_criterion_02_prefix_product():
    _run(2)


def test_criterion_03_sturmian_complexity():
    _run(3)


def test_criterion_04_repetition_intervals():
    _run(4)


def test_criterion_05_closed_form_oracle():
    _run(5)


def test_criterion_06_intercept_bijection():
    _run(6)


def test_criterion_07_duality():
    _run(7)


def test_criterion_08_characteristic_factorizations():
    _run(8)


def test_criterion_09_rauzy_structure():
    _run(9)


def test_criterion_10_torsion_identities():
    _run(10)


def test_criterion_11_self_complementary():
    _run(11)


def test_criterion_12_b_factorization():
    _run(12)


def test_criterion_13_dio_estimate():
    _run(13)


def test_criterion_14_mechanical_oracle():
    _run(14)
