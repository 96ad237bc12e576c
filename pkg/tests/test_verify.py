from evengap.verify import CheckResult, brute_force_gap_census, run_all


def test_all_families_pass_at_small_scale():
    results = run_all(10, 4)
    assert all(r.passed for r in results), [r.line() for r in results if not r.passed]
    names = [r.name for r in results]
    assert len(names) == len(set(names))


def test_result_lines():
    ok = CheckResult("demo", True, "details")
    assert ok.line() == "PASS demo: details"
    bad = CheckResult("demo", False, "details", "witness")
    assert bad.line() == "FAIL demo: details [witness]"


def test_bruteforce_census_small():
    assert brute_force_gap_census(0) == {()}
    assert brute_force_gap_census(1) == {(1,)}
    assert brute_force_gap_census(2) == {(1, 2), (1, 3)}
    assert len(brute_force_gap_census(6)) == 23
