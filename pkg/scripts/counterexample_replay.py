"""Replay the zero-divisor pair X = eps - 1, Y = eps + 1 under both norms."""

from s7check import even_algebra as ka
from s7check.even_algebra import KElement


def main():
    X = KElement.epsilon() - 1.0
    Y = KElement.epsilon() + 1.0
    XY = X * Y
    print("XY coords:", XY.coords().tolist())
    gx, gy, gxy = ka.geometric_norm(X), ka.geometric_norm(Y), ka.geometric_norm(XY)
    print(f"geometric  ||X|| = {gx.as_tuple()}  ||Y|| = {gy.as_tuple()}")
    print(f"geometric  ||XY|| = {gxy.as_tuple()}  ||X|| ||Y|| = {(gx * gy).as_tuple()}")
    sx, sy, sxy = ka.scalar_norm(X), ka.scalar_norm(Y), ka.scalar_norm(XY)
    print(f"scalar     ||X|| = {sx:.15g}  ||Y|| = {sy:.15g}")
    print(f"scalar     ||XY|| = {sxy:.15g}  ||X|| ||Y|| = {sx * sy:.15g}")


if __name__ == "__main__":
    main()
