from tourmat import checks
from tourmat.boolmat import BoolVec


def test_suite_passes_on_small_sizes():
    r = checks.run_check(10, range(1, 7), seed=3)
    assert r.ok, r.failure
    assert r.instances == 1 + 2 * 10 * 6
    assert all(v == r.instances for v in r.passed.values())


def test_instances_are_reproducible():
    a = list(checks.instances(4, [5], seed=9))
    b = list(checks.instances(4, [5], seed=9))
    assert a == b
    assert sum(s.is_tournament() for s in a[1:]) == 4


def test_corrupted_solver_is_caught():
    def broken(s, c, k):
        v = checks.default_solver(s, c, k)
        if c.value == "MD" and v.count() > 1:
            return BoolVec(s.n, v.bits & (v.bits - 1))
        return v

    r = checks.run_check(5, [5, 6], seed=1, solver=broken)
    assert not r.ok
    assert r.failure.instance.n in (5, 6)


def test_parse_n_range():
    assert checks.parse_n_range("3..5") == [3, 4, 5]
    assert checks.parse_n_range("4,6") == [4, 6]
    assert checks.parse_n_range("7") == [7]
