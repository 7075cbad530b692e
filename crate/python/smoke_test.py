"""Smoke test for the wordrep Python extension.

Build and install first:  pip install --no-build-isolation -e crates/python
"""

import wordrep


def alternates(word, x, y):
    sub = [c for c in word if c in (x, y)]
    return all(a != b for a, b in zip(sub, sub[1:]))


def check_certificate(word, graph):
    n = graph.n
    for x in range(n):
        for y in range(x + 1, n):
            assert alternates(word, x, y) == graph.has_edge(x, y), (x, y)


def main():
    w5 = wordrep.Graph.wheel(5)
    v = wordrep.classify(w5)
    assert v.status == "NotWordRepresentable", v
    assert v.witness == [1, 2, 3, 4, 5]
    assert not wordrep.semi_transitive(w5)

    w6 = wordrep.Graph.wheel(6)
    v = wordrep.classify(w6)
    assert v.r == 3 and v.prn == 3, v
    check_certificate(v.certificate, w6)
    assert wordrep.represents(v.certificate, w6)

    c6 = wordrep.Graph.cycle(6)
    k, word = wordrep.rep_number(c6)
    assert k == 2
    check_certificate(word, c6)
    assert wordrep.prn(c6)[0] == 3
    assert wordrep.rep_number(c6, cap=1) is None
    assert not wordrep.comparability(wordrep.Graph.cycle(5))

    k2 = wordrep.Graph.complete(2)
    assert wordrep.substitute(k2, 0, wordrep.Graph.cycle(5)) == w5
    blocks, quotient = wordrep.decompose(w6)
    assert blocks == [[0], [1, 2, 3, 4, 5, 6]]
    assert quotient.edges() == [(0, 1)]
    assert wordrep.lex_product(k2, c6).n == 12

    g = wordrep.Graph.parse("# path\n3 2\n0 1\n1 2\n")
    assert g == wordrep.Graph.path(3)
    try:
        wordrep.Graph.parse("3\n")
    except ValueError as e:
        assert "line 1" in str(e)
    else:
        raise AssertionError("malformed header accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
