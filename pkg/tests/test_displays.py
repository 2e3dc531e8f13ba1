from tangentpsc.curvature import check_worked_displays, displays_consistent


def test_displays_reproduce_except_the_flagged_product():
    checks = {check.name: check for check in check_worked_displays()}
    assert list(checks) == ['L', 'M', 'N', "M'", '2tMN', 'F2', 'F3', 'Sc (intermediate)', 'Sc (quintic)']
    mismatched = [name for name, check in checks.items() if not check.matches]
    assert mismatched == ['2tMN']
    assert checks['2tMN'].expected_mismatch


def test_flagged_display_differs_by_a_factor_of_two():
    check = next(check for check in check_worked_displays() if check.name == '2tMN')
    assert check.displayed == 2 * check.computed


def test_all_displays_consistent():
    assert displays_consistent(check_worked_displays())
