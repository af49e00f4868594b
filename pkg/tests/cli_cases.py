"""CLI invocations with golden outputs in tests/golden/<name>.json."""

Q11 = ["--ring", "GF(11)[x,y,z,u,v]", "--modulus", "x^5+y^5+z^5+u^5+v^5"]
CUSP = ["--ring", "GF(2)[x,y,z]/(z^2+x^2*y+x*y^2)"]
B4 = ["--ring", "GF(2)[x0,x1,x2,x3]"]

CASES = {
    "fedder_p11": ["fedder", *Q11],
    "fedder_p3": ["fedder", "--ring", "GF(3)[x,y,z,u,v]", "--modulus", "x^5+y^5+z^5+u^5+v^5"],
    "fedder_cusp_expansion": ["fedder", *CUSP, "--method", "expansion"],
    "perf_gcd": ["perf-gcd", "--ring", "GF(2)[x,y]", "--a", "root(x*y^2,1)", "--b", "root(x^2*y,1)"],
    "perf_gcd_levels": ["perf-gcd", "--ring", "GF(2)[x]", "--a", "root(x,1)", "--b", "root(x,2)"],
    "perf_colon": ["perf-colon", "--ring", "GF(2)[x,y]", "--a", "root(x*y^2,1)", "--b", "root(x^2*y,1)"],
    "perf_colon_zero": ["perf-colon", "--ring", "GF(2)[x,y]", "--a", "x", "--b", "0"],
    "perf_eq": ["perf-eq", "--ring", "GF(2)[x,y]", "--a", "root(x^2*y^2,1)", "--b", "x*y"],
    "perf_arith": ["perf-arith", "--ring", "GF(2)[x,y]", "--a", "root(x,1)", "--b", "root(y,1)", "--op", "add"],
    "fclosure_cusp": ["fclosure", *CUSP, "--ideal", "x,y", "--f", "z"],
    "fclosure_poly": ["fclosure", "--ring", "GF(2)[x,y]", "--ideal", "x", "--f", "y", "--bound", "3"],
    "tclose_search_x4": ["tclose-search", *Q11, "--ideal", "y,z,u,v", "--f", "x^4"],
    "tclose_verify_x4": ["tclose-verify", *Q11, "--ideal", "y,z,u,v", "--f", "x^4", "--c", "x"],
    "tclose_search_x": ["tclose-search", *Q11, "--ideal", "y,z,u,v", "--f", "x", "--degree-cap", "8"],
    "colon": ["colon", *Q11, "--ideal", "y,z,u,v", "--f", "x^4"],
    "colon_by_zero": ["colon", "--ring", "GF(2)[x,y]", "--ideal", "x", "--f", "0"],
    "intersect": ["intersect", "--ring", "GF(2)[x,y]", "--ideal", "x*y^2", "--ideal2", "x^2*y"],
    "member_x4": ["member", *Q11, "--ideal", "y,z,u,v", "--f", "x^4"],
    "member_x5": ["member", *Q11, "--ideal", "y,z,u,v", "--f", "x^5"],
    "gb": ["gb", "--ring", "GF(11)[x,y,z,u,v]", "--ideal", "y,z,u,v,x^5+y^5+z^5+u^5+v^5"],
    "gb_lex": ["gb", "--ring", "GF(7)[x,y]", "--order", "lex", "--ideal", "x^2+y,x*y-1"],
    "inv_hilbert_d4": ["inv-hilbert", *B4, "--degree", "4"],
    "inv_orbits_d2": ["inv-orbits", *B4, "--degree", "2"],
    "inv_check": ["inv-check", *B4, "--f", "x0*x2+x1*x3"],
    "inv_generates": ["inv-generates", *B4, "--gens", "x0+x1+x2+x3", "--degree", "2"],
    "remark_poly": ["remark-experiment", "--ring", "GF(2)[x,y,z]", "--trials", "20", "--seed", "1"],
    "remark_quotient": ["remark-experiment", "--ring", "GF(2)[x,y,z]/(x*y+z^2)", "--exhaustive"],
    "cyclic_spot": ["cyclic-spot", *CUSP, "--ideals", "x,y;1"],
}
