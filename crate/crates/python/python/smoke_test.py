"""Smoke test for the pynonic extension.

Build and run:
    maturin develop -m crates/python/Cargo.toml && python crates/python/python/smoke_test.py
or, without maturin:
    cargo build -p nonic-index-py --features extension-module --release
    cp target/release/libpynonic.so pynonic.so && PYTHONPATH=. python crates/python/python/smoke_test.py
"""

import pynonic

EXAMPLES = [
    (51, 122, 1),
    (1392, 768, 2),
    (126, 40130, 3),
    (15381, 6634, 6),
    (183, 296, 8),
    (7335, 24184, 24),
]


def main():
    for a, b, index in EXAMPLES:
        r = pynonic.classify(a, b)
        assert r.index == index, (a, b, r.index_text)

    r = pynonic.classify(35, 20)
    assert r.index is None and r.entry(2).nu_text == ">=1"

    v = pynonic.nu(183, 296, 2)
    assert v.nu == 3 and v.splitting == [(1, 1), (2, 1), (2, 1), (4, 1)]

    assert pynonic.disc(1, 1) == 2**24 + 3**18
    big = (10**30 + 7, -(10**25) + 3)
    assert pynonic.disc(*big) == pynonic.disc_resultant(*big)

    assert pynonic.divides_index([(1, 1), (1, 1), (7, 1)], 2)
    assert pynonic.nu_lookup([(1, 1), (1, 1), (7, 1)], 2) == 1
    assert pynonic.splitting(2, 2, 2) == [(9, 1)]

    poly = pynonic.polygon(16, 8, 2, 0)
    assert poly["sides"][0]["factors"] == "(y + 1)(y^2 + y + 1)"

    try:
        pynonic.classify(-9, 8)
    except pynonic.ReducibleError:
        pass
    else:
        raise AssertionError("x^9 - 9x + 8 has the root 1")

    rep = pynonic.check_worked_examples()
    assert rep["classes_checked"] == 7 and not rep["mismatches"]
    rep = pynonic.sweep_dedekind(3, 9, lifts=2, seed=5)
    assert not rep["mismatches"]

    print("pynonic smoke test: ok")


if __name__ == "__main__":
    main()
