"""Lists reducible silver polynomials by degree using sympy factorization.

Output is the C++ table in reducible_silver.hpp.
"""
import itertools

import sympy

x = sympy.symbols("x")


def reducible(n):
    out = []
    for head in itertools.product("01", repeat=n - 1):
        bits = "".join(head) + "1"
        if bits.count("1") < 2:
            continue
        poly = x**n - sum(int(b) * x ** (n - j) for j, b in enumerate(bits, start=1))
        if not sympy.Poly(poly, x).is_irreducible:
            out.append(bits)
    return out


if __name__ == "__main__":
    print("// Generated by reducible_silver.py")
    print("inline const std::map<int, std::vector<std::string>> kReducibleSilver = {")
    for n in range(2, 11):
        rows = reducible(n)
        body = ", ".join(f'"{b}"' for b in rows)
        print(f"    {{{n}, {{{body}}}}},")
    print("};")
