"""Version-tagged line-oriented text formats.

Series:   `dirichlet v1 single <N>` then `<n> <re> <im>` lines;
          `dirichlet v1 double <M> <N>` then `<m> <n> <re> <im>` lines.
Symbols:  `symbol v1 single <c0>` / `symbol v1 double <c1> <d1> <c2> <d2>`
          followed by the embedded series block(s).
Polynomials: `bohr v1 single` then `<alpha> <re> <im>` with alpha written
          as comma-separated pos:exp pairs (`-` for the empty index).

Floats are printed with repr (shortest round-trip), `#` starts a comment,
output ordering is index-lexicographic so files are diffable.
"""

from __future__ import annotations

from .bohr import DoublePrimePolynomial, PrimePolynomial
from .compose import DoubleSymbol, Symbol
from .double import DoubleDirichletSeries, make_double_series
from .series import DirichletSeries, make_series


class FormatError(ValueError):
    pass


def _clean_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _fmt(x: float) -> str:
    return repr(float(x))


def dumps_series(D) -> str:
    if isinstance(D, DirichletSeries):
        lines = ["dirichlet v1 single %d" % D.truncation]
        for n in sorted(D.terms):
            c = D.terms[n]
            lines.append("%d %s %s" % (n, _fmt(c.real), _fmt(c.imag)))
    elif isinstance(D, DoubleDirichletSeries):
        lines = ["dirichlet v1 double %d %d" % D.truncations]
        for m, n in sorted(D.terms):
            c = D.terms[(m, n)]
            lines.append("%d %d %s %s" % (m, n, _fmt(c.real), _fmt(c.imag)))
    else:
        raise TypeError("expected a series")
    return "\n".join(lines) + "\n"


def loads_series(text: str):
    lines = _clean_lines(text)
    if not lines:
        raise FormatError("empty series file")
    series, rest = _parse_series_block(lines)
    if rest:
        raise FormatError("trailing content after series block: %r" % rest[0])
    return series


def _parse_series_block(lines: list[str]):
    if not lines:
        raise FormatError("expected a series block, found end of input")
    head = lines[0].split()
    if len(head) < 3 or head[0] != "dirichlet" or head[1] != "v1":
        raise FormatError("bad series header: %r" % lines[0])
    if head[2] == "single":
        if len(head) != 4:
            raise FormatError("single header needs one truncation")
        trunc = int(head[3])
        terms = []
        i = 1
        while i < len(lines):
            parts = lines[i].split()
            if parts[0] in ("dirichlet", "symbol", "bohr"):
                break
            if len(parts) != 3:
                raise FormatError("bad single term line: %r" % lines[i])
            terms.append((int(parts[0]), complex(float(parts[1]), float(parts[2]))))
            i += 1
        return make_series(terms, trunc), lines[i:]
    if head[2] == "double":
        if len(head) != 5:
            raise FormatError("double header needs two truncations")
        truncs = (int(head[3]), int(head[4]))
        terms = []
        i = 1
        while i < len(lines):
            parts = lines[i].split()
            if parts[0] in ("dirichlet", "symbol", "bohr"):
                break
            if len(parts) != 4:
                raise FormatError("bad double term line: %r" % lines[i])
            terms.append(
                ((int(parts[0]), int(parts[1])), complex(float(parts[2]), float(parts[3])))
            )
            i += 1
        return make_double_series(terms, truncs), lines[i:]
    raise FormatError("unknown series kind: %r" % head[2])


def dumps_symbol(sym) -> str:
    if isinstance(sym, Symbol):
        return "symbol v1 single %d\n" % sym.c0 + dumps_series(sym.phi)
    if isinstance(sym, DoubleSymbol):
        return (
            "symbol v1 double %d %d %d %d\n" % (sym.c1, sym.d1, sym.c2, sym.d2)
            + dumps_series(sym.phi1)
            + dumps_series(sym.phi2)
        )
    raise TypeError("expected a symbol")


def loads_symbol(text: str):
    lines = _clean_lines(text)
    if not lines:
        raise FormatError("empty symbol file")
    head = lines[0].split()
    if len(head) < 3 or head[0] != "symbol" or head[1] != "v1":
        raise FormatError("bad symbol header: %r" % lines[0])
    if head[2] == "single":
        if len(head) != 4:
            raise FormatError("single symbol header needs c0")
        phi, rest = _parse_series_block(lines[1:])
        if rest:
            raise FormatError("trailing content after symbol")
        if not isinstance(phi, DirichletSeries):
            raise FormatError("single symbol needs a single series part")
        return Symbol(int(head[3]), phi)
    if head[2] == "double":
        if len(head) != 7:
            raise FormatError("double symbol header needs four slopes")
        phi1, rest = _parse_series_block(lines[1:])
        phi2, rest = _parse_series_block(rest)
        if rest:
            raise FormatError("trailing content after symbol")
        if not (isinstance(phi1, DoubleDirichletSeries) and isinstance(phi2, DoubleDirichletSeries)):
            raise FormatError("double symbol needs two double series parts")
        return DoubleSymbol(int(head[3]), int(head[4]), int(head[5]), int(head[6]), phi1, phi2)
    raise FormatError("unknown symbol kind: %r" % head[2])


def _fmt_alpha(alpha) -> str:
    if not alpha:
        return "-"
    return ",".join("%d:%d" % (pos, e) for pos, e in alpha)


def _parse_alpha(text: str):
    if text == "-":
        return ()
    parts = []
    for chunk in text.split(","):
        pos, e = chunk.split(":")
        parts.append((int(pos), int(e)))
    return tuple(parts)


def dumps_polynomial(P) -> str:
    if isinstance(P, PrimePolynomial):
        lines = ["bohr v1 single"]
        for alpha in sorted(P.terms):
            c = P.terms[alpha]
            lines.append("%s %s %s" % (_fmt_alpha(alpha), _fmt(c.real), _fmt(c.imag)))
    elif isinstance(P, DoublePrimePolynomial):
        lines = ["bohr v1 double"]
        for alpha, beta in sorted(P.terms):
            c = P.terms[(alpha, beta)]
            lines.append(
                "%s %s %s %s" % (_fmt_alpha(alpha), _fmt_alpha(beta), _fmt(c.real), _fmt(c.imag))
            )
    else:
        raise TypeError("expected a prime polynomial")
    return "\n".join(lines) + "\n"


def loads_polynomial(text: str):
    lines = _clean_lines(text)
    if not lines:
        raise FormatError("empty polynomial file")
    head = lines[0].split()
    if head[:2] != ["bohr", "v1"] or len(head) != 3:
        raise FormatError("bad polynomial header: %r" % lines[0])
    if head[2] == "single":
        terms = {}
        for line in lines[1:]:
            parts = line.split()
            if len(parts) != 3:
                raise FormatError("bad polynomial line: %r" % line)
            terms[_parse_alpha(parts[0])] = complex(float(parts[1]), float(parts[2]))
        return PrimePolynomial(terms)
    if head[2] == "double":
        terms = {}
        for line in lines[1:]:
            parts = line.split()
            if len(parts) != 4:
                raise FormatError("bad polynomial line: %r" % line)
            terms[(_parse_alpha(parts[0]), _parse_alpha(parts[1]))] = complex(
                float(parts[2]), float(parts[3])
            )
        return DoublePrimePolynomial(terms)
    raise FormatError("unknown polynomial kind: %r" % head[2])


def check_line(name: str, passed: bool, value: float, tolerance: float) -> str:
    """One assertion in the report format."""
    return "check %s %s %s %s" % (name, "pass" if passed else "fail", _fmt(value), _fmt(tolerance))


def norm_estimate_line(est) -> str:
    import json

    return json.dumps(
        {
            "value": est.value,
            "stderr": est.stderr,
            "samples": est.samples,
            "seed": est.seed,
            "kind": est.kind,
        }
    )
