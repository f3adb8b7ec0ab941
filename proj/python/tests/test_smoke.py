import sijection as sj


def test_counts():
    assert sj.mt_counts([1, 2, 3]) == (7, 0)
    assert sj.sgt_counts([1, 2, 3]) == (10, 3)
    assert sj.gt_polynomial([1, 2, 3]) == 8
    assert sj.operator_formula([1, 2, 3, 4]) == 42
    assert sj.asm_formula(6) == 7436


def test_asm_bridge():
    asms = sj.all_asms(3)
    assert len(asms) == 7
    for a in asms:
        assert sj.mt_to_asm(sj.asm_to_mt(a)) == a
    assert sj.asm_violations([[1, 0], [1, 0]])


def test_verify():
    rep = sj.Gamma([1, 2, 3], 0).verify(check_normal=False)
    assert rep["ok"]
    assert rep["domain_size"] == 7
    assert sj.alpha(1, 5, 3).verify(check_normal=True)["normal"]


def test_gamma_table():
    pairs = sj.gamma_table([1, 2, 3], 0)
    assert len(pairs) == 10
    assert ("MT(1;1,2;1,2,3)", "(GT(1;1,1;1,1,1), SE SE SE)") in pairs


def test_configuration_error():
    try:
        sj.sigma([1, 1], [2, 1], 1)
    except ValueError:
        pass
    else:
        raise AssertionError("sigma accepted a bad shape")
