"""Quick checks of the Python bindings. Run after `pip install -e crates/python`."""

import signhom as sh

uc4 = sh.gen_uc(4)
assert len(uc4) == 4 and not uc4.is_balanced()
assert sh.Graph.from_json(uc4.to_json()) == uc4

c4 = sh.gen_cycle(4, [-1, -1, 1, 1])
plain = sh.gen_cycle(4)
assert c4.is_balanced()
assert c4.switching_equivalent(plain) is not None

k3, k4 = sh.gen_complete(3), sh.gen_complete(4)
assert sh.find_hom(k3, k4) is not None
assert sh.find_hom(k4, k3) is None
assert len(sh.enumerate_homs(k3, k3)) == 6

r = sh.rho(uc4)
assert sh.is_isomorphic(r, sh.rho_uc_canonical(4))

ind, i, j = sh.cc_indicator(5)
star = sh.indicator_apply(sh.gen_circular_clique(8, 3), ind, i, j)
assert sh.is_isomorphic(star, sh.gen_cycle_square(8))
assert len(sh.core_of(sh.gen_cycle_square(8))) == 8

g, ports, zeros = sh.gadget("degree", k=2, m=2)
assert sh.check_forcing(g, zeros, r)["forced"]

h, cert = sh.reduce_3col_to_uc4(k3)
assert "edge:k_0-k_1" in cert["ports"] and cert["rotation"] is not None
assert h.certify_embedding()
assert sh.find_shom(h, uc4) is not None

c5 = sh.gen_circular_clique(5, 2)
h, cert = sh.reduce_to_cycle_square(c5, 7)
assert cert["rotation"] is None

try:
    sh.Graph(["a"], [("a", "b", 1)])
except sh.SignhomError:
    pass
else:
    raise AssertionError("bad endpoint accepted")

reports = sh.run_claims("lemma8.*", 60.0)
assert reports and all(x["status"] == "verified" for x in reports), reports

print("smoke ok")
