"""Draw the ample and tensor-ample pieces of the cone of F_3.

    python3 demos/cone_figure.py [out.svg]
"""
import sys

from tensamp import builders as B
from tensamp.conedraw import cone_slice, slice_csv, slice_svg
from tensamp.surface import tensor_ample_cone_pieces


def fmt(xs) -> str:
    if isinstance(xs, dict):
        return "{" + ", ".join(f"{k}: {v}" for k, v in xs.items()) + "}"
    return "(" + ", ".join(str(x) for x in xs) + ")"


def main(out="f3_cone.svg"):
    m = B.build_ruled(B.RuledData(0, -3, B.Unstable(-3)))
    for p in tensor_ample_cone_pieces(m).pieces:
        print(f"piece {p.signs}: witness {fmt(p.witness.coeffs)}, ample={p.is_amp}")
    s = cone_slice(m)
    print(slice_csv(s))
    with open(out, "w") as fh:
        fh.write(slice_svg(s, "F_3"))
    print(f"wrote {out}")


if __name__ == "__main__":
    main(*sys.argv[1:])
