from darbouxp.survey import CSV_HEADER, rows_to_csv, run_survey


def test_structural_counts():
    rows, records = run_survey(2, degree=3, samples=100, seed=42)
    (row,) = rows
    assert row.dep_zero + row.invariant_found + row.provably_none == 100
    assert len(records) == 100
    # provably_none only ever happens with zero divergence
    for rec in records:
        if rec[1] == "provably_none":
            assert rec[2] == 0


def test_divergent_linear_fields_have_invariant_hypersurface():
    rows, records = run_survey(3, degree=1, samples=50, seed=7)
    assert rows[0].div_nonzero > 0
    for rec in records:
        if rec[2] == 1 and rec[1] != "first_integral_exists":
            assert rec[1] == "invariant_hypersurface"


def test_zero_samples():
    assert run_survey(5, degree=2, samples=0, seed=1) == ([], [])


def test_determinism():
    a = rows_to_csv(run_survey(3, degree=2, samples=30, seed=11)[0])
    b = rows_to_csv(run_survey(3, degree=2, samples=30, seed=11)[0])
    assert a == b
    assert a.split("\n")[0] == ",".join(CSV_HEADER)
    c = rows_to_csv(run_survey(3, degree=2, samples=30, seed=12)[0])
    assert c != a


def test_exact_degree_and_capacity():
    rows, records = run_survey(5, degree=3, samples=5, seed=3, exact_degree=True, cap=8)
    assert all(r[1] == "capacity_exceeded" for r in records)
    assert rows[0].samples == 5 and rows[0].dep_zero + rows[0].invariant_found + rows[0].provably_none == 0
