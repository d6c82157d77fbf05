"""Smoke test for the primeflags Python extension."""

import primeflags as pf


def main():
    flag = pf.Flag([1, 1, 1])
    assert flag.parts == [1, 1, 1] and flag.n == 3 and len(flag) == 3
    assert pf.Flag.parse("1,1,1") == flag
    assert flag.char_poly().startswith("zeta^6 - 12*zeta^4*q1")
    assert flag.char_poly_at([1, 1]) == [-512, 0, -240, 0, -24, 0, 1]
    assert flag.classify(1) == ("non-exceeding", "non-exceeding")
    assert not flag.is_simple_at_one()
    assert len(flag.weight_basis()) == 6
    assert len(pf.Flag([2, 2]).companion()) == 4

    assert pf.lcyr(10, 3) == 23
    assert pf.sequence_table("lcyr", 6).splitlines()[1] == "2,1,2,2,4,2"
    assert pf.eulerian_polynomial(4) == [0, 1, 11, 11, 1]
    assert pf.diagonal_polynomial("ell", 3) == ("(N^3 - 9*N^2 + 32*N - 12)/6", 2)
    assert pf.dirichlet_check(500) == (True, None)

    lam, source = pf.witness(7, 5)
    assert lam.parts == [1, 1, 2, 1, 2] and source == "small-case"
    assert lam.is_prime_type()
    assert pf.witness(11, 4) is None
    holds, omega = pf.goldbach_report(40)
    assert holds and omega[:5] == [11, 17, 23, 27, 29]

    assert pf.fabry_lindelof(29, 5).startswith("1.04987")

    try:
        pf.Flag([3, 3, 3]).is_simple_at_one()
    except pf.SizeGuardError:
        pass
    else:
        raise AssertionError("size guard not raised")
    try:
        pf.Flag([1, 0])
    except ValueError:
        pass
    else:
        raise AssertionError("invalid composition accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
