"""Walk the anticanonical class of F_n through every classifier.

    python3 demos/hirzebruch_walkthrough.py
"""
from tensamp import builders as B
from tensamp.surface import canonical_report, classify, zariski_decompose

PROPS = ("nef", "ample", "big", "antibig", "tensample")


def fmt(xs) -> str:
    if isinstance(xs, dict):
        return "{" + ", ".join(f"{k}: {v}" for k, v in xs.items()) + "}"
    return "(" + ", ".join(str(x) for x in xs) + ")"


def main():
    for n in range(1, 7):
        m = B.build_ruled(B.RuledData(0, -n, B.Unstable(-n)))
        mk = -m.canonical
        row = {p: classify(m, mk, p).status.value for p in PROPS}
        print(f"F_{n}: -K = {fmt(mk.coeffs)}  " + "  ".join(f"{p}={s}" for p, s in row.items()))
        v = canonical_report(m).tensor_ample
        if v.no:
            print(f"      obstruction: curve {v.witness} with K.C = 0")
        z = zariski_decompose(m, mk)
        if z.negative:
            p2 = m.pair(z.positive, z.positive)
            print(f"      Zariski: P = {fmt(z.positive.coeffs)}, N = {fmt(z.negative)}, P^2 = {p2}")
    print()
    print("Only F_2 fails: its section is a (-2)-curve orthogonal to K.")
    print("From F_3 on, -K is big with negative pairing on C0, so the section no longer obstructs.")


if __name__ == "__main__":
    main()
