#!/usr/bin/env python3
"""Regenerate the regime table files from the infix sources below.

Each entry becomes an expression tree {op, args}; leaves are rational
constants (strings "p/q") or {"sym": name}. Symbols:
  lambda1..lambda3, q, eps, sqrtq
  R1..R3      (lambda_i^2 - 4q)^(1/2), principal branch
  S1..S3      sin(pi lambda_i / eps)
  C1..C3      cos(pi lambda_i / eps)
  zeta, rt    rt = (1 - zeta^2)^(1/2)
  w           (1 - zeta^2)^(-1/2)
Usage: python3 generate.py  (writes *.json next to this script)
"""

import ast
import json
import math
import os
from fractions import Fraction

NAMES = {
    "l": "lambda1", "l1": "lambda1", "l2": "lambda2", "l3": "lambda3",
    "q": "q", "e": "eps", "sq": "sqrtq",
    "R": "R1", "R1": "R1", "R2": "R2", "R3": "R3",
    "S": "S1", "S1": "S1", "S2": "S2", "S3": "S3",
    "C1": "C1", "C2": "C2", "C3": "C3",
    "zeta": "zeta", "rt": "rt", "w": "w",
}
OPS = {ast.Add: "add", ast.Sub: "sub", ast.Mult: "mul", ast.Div: "div"}


def num(f):
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def tree(node):
    if isinstance(node, ast.Expression):
        return tree(node.body)
    if isinstance(node, ast.Constant):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        return {"sym": NAMES[node.id]}
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        a = tree(node.operand)
        return -a if isinstance(a, Fraction) else {"op": "neg", "args": [a]}
    if isinstance(node, ast.BinOp):
        a, b = tree(node.left), tree(node.right)
        if isinstance(node.op, ast.Pow):
            if not isinstance(b, Fraction) or b.denominator != 1:
                raise ValueError("exponent must be an integer literal")
            if isinstance(a, Fraction):
                return a ** int(b)
            return {"op": "pow", "args": [a, num(b)]}
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            return {ast.Add: a + b, ast.Sub: a - b, ast.Mult: a * b, ast.Div: a / b}[type(node.op)]
        return {"op": OPS[type(node.op)], "args": [leaf(a), leaf(b)]}
    if isinstance(node, ast.Call) and node.func.id == "log":
        return {"op": "log", "args": [leaf(tree(node.args[0]))]}
    raise ValueError(f"unsupported syntax: {ast.dump(node)}")


def leaf(x):
    return num(x) if isinstance(x, Fraction) else x


def expr(text):
    return leaf(tree(ast.parse(text, mode="eval")))


def entry(text, **fields):
    d = dict(fields)
    d["text"] = text
    d["expr"] = expr(text)
    return d


EPS0 = [
    # k = 1 entries are the coefficients of the H1* expansion (after log sqrt(q) - log lambda)
    entry("log(2*l/(l+R))", k=1, g=0, weight=0),
    entry("-l*(l**2-16*q)/(24*R**5)", k=1, g=1, weight=-2),
    entry("l*(7*l**6-94*q*l**4+8256*q**2*l**2+18432*q**3)/(960*R**11)", k=1, g=2, weight=-4),
    entry("(l1*l2-R1*R2-4*q)/(2*(l1-l2)**2*R1*R2)", k=2, g=0, weight=-2),
    entry("q/(4*R1**7*R2**7)*(l1**3*l2**3*(l1**2+l2**2)"
          "+4*q*l1*l2*(4*l1**4+5*l1**3*l2-l1**2*l2**2+5*l1*l2**3+4*l2**4)"
          "-16*q**2*l1*l2*(10*l1**2+17*l1*l2+10*l2**2)"
          "+64*q**3*(2*l1**2+11*l1*l2+2*l2**2)+768*q**4)", k=2, g=1, weight=-4),
    entry("q*(l1*l2*l3+4*q*(l1+l2+l3))/(R1**3*R2**3*R3**3)", k=3, g=0, weight=-4),
]

# small-eps expansions of G/2 - 1/2 (a_m) and sqrt(q) G~/(lambda + eps/2) (c_m)
BLOCKS = [
    entry("l/(2*R)-1/2", block="a", m=0, weight=0),
    entry("q*l*(l**2+16*q)/(4*R**7)", block="a", m=2, weight=-2),
    entry("q*l*(l**6+247*q*l**4+2848*q**2*l**2+3072*q**3)/(16*R**13)", block="a", m=4, weight=-4),
    entry("sq/R", block="c", m=0, weight=0),
    entry("-sq*l/(2*R**3)", block="c", m=1, weight=-1),
    entry("sq*(l**4+6*q*l**2)/(4*R**7)", block="c", m=2, weight=-2),
    entry("sq*l*(l**4+42*q*l**2+96*q**2)/(8*R**9)", block="c", m=3, weight=-3),
]

EPS_INF = [
    entry("0", k=1, g=0, weight=0),
    entry("-4*q", k=1, g=1, weight=2),
    entry("-16*q*l**2+8*q**2/3", k=1, g=2, weight=4),
    entry("-64*q*l**4+320*q**2*l**2/27-128*q**3/135", k=1, g=3, weight=6),
    entry("0", k=2, g=0, weight=0, implied=True),
    entry("16*q", k=2, g=1, weight=2),
    entry("64*q*(l1**2+l2**2)-256*q**2/9", k=2, g=2, weight=4),
    entry("256*q*(l1**4+l1**2*l2**2+l2**4)-256*q**2*(37*l1**2-2*l1*l2+37*l2**2)/81+53248*q**3/2025",
          k=2, g=3, weight=6),
    entry("0", k=3, g=0, weight=0, implied=True),
    entry("-64*q", k=3, g=1, weight=2),
    entry("-256*q*(l1**2+l2**2+l3**2)+6656*q**2/27", k=3, g=2, weight=4),
    entry("-1024*q*(l1**4+l2**4+l3**4+l1**2*l2**2+l2**2*l3**2+l3**2*l1**2)"
          "+4096*q**2*(59*(l1**2+l2**2+l3**2)-(l1*l2+l2*l3+l3*l1))/243-13027328*q**3/30375",
          k=3, g=3, weight=6),
]

# building blocks in 1/eps: G/2 - 1/2 and G~/(lambda + eps/2), truncated
EPS_INF_BLOCKS = [
    entry("-4*q", block="A", order=2, weight=2),
    entry("-16*q*(l**2-q/3)", block="A", order=4, weight=4),
    entry("-64*q*(l**4-10*l**2*q/27+2*q**2/45)", block="A", order=6, weight=6),
    entry("2", block="C", order=1, weight=0),
    entry("-4*l", block="C", order=2, weight=1),
    entry("8*(l**2-2*q/3)", block="C", order=3, weight=2),
    entry("-16*(l**3-2*l*q/9)", block="C", order=4, weight=3),
    entry("32*(l**4-20*l**2*q/27+2*q**2/15)", block="C", order=5, weight=4),
    entry("-64*(l**5-20*l**3*q/81+2*l*q**2/75)", block="C", order=6, weight=5),
]


def h1_q0(d):
    den = "*".join(f"(l**2-{(2 * j - 1) ** 2}*e**2/4)" for j in range(1, d + 1))
    return f"{math.factorial(2 * d - 1)}/({math.factorial(d) ** 2}*{den})"


Q0 = [entry(h1_q0(d), k=1, d=d, weight=-2 * d) for d in range(1, 7)] + [
    entry("e**2/((l1**2-e**2/4)*(l2**2-e**2/4))", k=2, d=1, weight=-2),
    entry("e**2*(3*l1**2+2*l1*l2+3*l2**2-9*e**2)"
          "/((l1**2-e**2/4)*(l2**2-e**2/4)*(l1**2-9*e**2/4)*(l2**2-9*e**2/4))", k=2, d=2, weight=-4),
    entry("e**2*(10*l1**4+8*l1**3*l2+12*l1**2*l2**2+8*l1*l2**3+10*l2**4"
          "-e**2*(110*l1**2+68*l1*l2+110*l2**2)+325*e**4)"
          "/((l1**2-e**2/4)*(l2**2-e**2/4)*(l1**2-9*e**2/4)*(l2**2-9*e**2/4)"
          "*(l1**2-25*e**2/4)*(l2**2-25*e**2/4))", k=2, d=3, weight=-6),
    entry("e**4/((l1**2-e**2/4)*(l2**2-e**2/4)*(l3**2-e**2/4))", k=3, d=1, weight=-2),
    entry("e**4*(48*(l1**2*l2**2+l1**2*l3**2+l2**2*l3**2)+32*l1*l2*l3*(l1+l2+l3)"
          "-24*e**2*(l1*l2+l1*l3+l2*l3+6*(l1**2+l2**2+l3**2))+351*e**4)"
          "/((l1**2-e**2/4)*(l2**2-e**2/4)*(l3**2-e**2/4)"
          "*(l1**2-9*e**2/4)*(l2**2-9*e**2/4)*(l3**2-9*e**2/4))", k=3, d=2, weight=-4),
]

# (prod cos) H_k ~ sum_d q^(-d/2) [H^{d,0} + sum_m H^{d,m} cos(4m sqrt(q)/eps) + Ht^{d,m} sin(...)]
# k = 1 rows are the oscillating coefficients of cos(pi lambda/eps) H1*.
Q_INF = [
    entry("e**2*(1/2-C1*C2-S1*S2)/(l1-l2)**2", k=2, d=0, m=0, kind="cos", weight=0),
    entry("0", k=2, d=1, m=0, kind="cos", weight=1),
    entry("-e**2*(S1-S2)/(4*(l1-l2))", k=2, d=1, m=1, kind="cos", weight=1),
    entry("0", k=2, d=1, m=1, kind="sin", weight=1),
    entry("(e**2-2*e**2*S1*S2-2*(l1+l2)**2)/32", k=2, d=2, m=0, kind="cos", weight=2),
    entry("0", k=2, d=2, m=1, kind="cos", weight=2),
    entry("e*((e**2-2*l1**2)*S2-(e**2-2*l2**2)*S1)/(16*(l1-l2))", k=2, d=2, m=1, kind="sin", weight=2),
    entry("e**2/32", k=2, d=2, m=2, kind="cos", weight=2),
    entry("0", k=2, d=3, m=0, kind="cos", weight=3),
    entry("((e**4-e**2*(l1**2+2*l2**2)+l2**4)*S1-(e**4-e**2*(2*l1**2+l2**2)+l1**4)*S2)/(32*(l1-l2))",
          k=2, d=3, m=1, kind="cos", weight=3),
    entry("0", k=2, d=3, m=1, kind="sin", weight=3),
    entry("0", k=2, d=3, m=2, kind="cos", weight=3),
    entry("e*(e**2-(l1**2+l2**2))/64", k=2, d=3, m=2, kind="sin", weight=3),
    entry("0", k=3, d=0, m=0, kind="cos", weight=0),
    entry("-e**2*((l2**2-l3**2)*S1+(l3**2-l1**2)*S2+(l1**2-l2**2)*S3)/(4*(l1-l2)*(l2-l3)*(l3-l1))",
          k=3, d=1, m=0, kind="cos", weight=1),
    entry("0", k=3, d=1, m=1, kind="cos", weight=1),
    entry("e**3*((l1-l2)*S1*S2+(l2-l3)*S2*S3+(l3-l1)*S3*S1)/(4*(l1-l2)*(l2-l3)*(l3-l1))",
          k=3, d=1, m=1, kind="sin", weight=1),
    entry("0", k=1, d=1, m=1, kind="cos", weight=1),
    entry("(2*l**2-e**2)/16", k=1, d=2, m=1, kind="cos", weight=2),
    entry("0", k=1, d=3, m=1, kind="cos", weight=3),
    entry("-(2*l**6-16*e**2*l**4+32*e**4*l**2-9*e**6)/(384*e**2)", k=1, d=4, m=1, kind="cos", weight=4),
    entry("e/4", k=1, d=1, m=1, kind="sin", weight=1),
    entry("0", k=1, d=2, m=1, kind="sin", weight=2),
    entry("-(l**4-3*e**2*l**2+e**4)/(32*e)", k=1, d=3, m=1, kind="sin", weight=3),
    entry("0", k=1, d=4, m=1, kind="sin", weight=4),
]

DEBYE = [
    entry("-1+rt+log(zeta)-log(1+rt)", name="V", m=0),
    entry("1/2+log(1+rt)/2-log(zeta)/2-log(1-zeta**2)/4", name="V", m=1),
    entry("-1/6+w**2/4-5*w**3/24", name="V", m=2),
    entry("-1/48+w**3/4-w**4/4-5*w**5/16+5*w**6/16", name="V", m=3),
    entry("-1+rt-log(1+rt)", name="U", m=0),
    entry("1/2+log(1+rt)/2-log(1-zeta**2)/4", name="U", m=1),
    entry("-1/6+w**2/4-5*w**3/24", name="U", m=2),
    entry("-1/48+w**3/4-w**4/4-5*w**5/16+5*w**6/16", name="U", m=3),
]


def write(name, regime, entries, **extra):
    here = os.path.dirname(os.path.abspath(__file__))
    doc = {"regime": regime, **extra, "entries": entries}
    with open(os.path.join(here, name), "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    write("eps0.json", "eps0", EPS0, blocks=BLOCKS)
    write("eps_inf.json", "epsInf", EPS_INF, blocks=EPS_INF_BLOCKS)
    write("q0.json", "q0", Q0)
    write("q_inf.json", "qInf", Q_INF)
    write("debye.json", "debye", DEBYE)
