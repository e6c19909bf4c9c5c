"""Presentation files: parsing, validation and printing.

    field Q[u]/(u^2+1)
    param p = 2
    gen z1 : (1,1,0)
    gen z2 : (1,0,1)
    rel z1*z2^2 - p^2*z2^2*z1
"""
import re

from .field import QQ, Field, FieldError, make_field
from .poly import NCPoly, word_degree


class ParseError(ValueError):
    def __init__(self, msg, line=None, col=None):
        self.msg = msg
        self.line = line
        self.col = col
        where = "" if line is None else "line %d, col %d: " % (line, col)
        super().__init__(where + msg)


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(\d+)|(.))")


def tokenize(text, line=1, col0=1):
    toks = []
    pos = 0
    text = text.split("#", 1)[0]
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1):
            toks.append(("id", m.group(1), line, col0 + start))
        elif m.group(2):
            toks.append(("int", m.group(2), line, col0 + start))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^(),:=[]":
                raise ParseError("malformed token %r" % ch, line, col0 + start)
            toks.append(("op", ch, line, col0 + start))
        pos = m.end()
    toks.append(("end", "", line, col0 + len(text)))
    return toks


class _Expr:
    """Recursive-descent evaluator for polynomial expressions."""

    def __init__(self, toks, field, gens, params, unbound=()):
        self.toks = toks
        self.i = 0
        self.field = field
        self.gens = gens
        self.params = params
        self.unbound = set(unbound)

    def peek(self):
        return self.toks[self.i]

    def take(self, val=None):
        t = self.toks[self.i]
        if val is not None and t[1] != val:
            self.fail("expected %r, found %r" % (val, t[1] or "end of line"), t)
        self.i += 1
        return t

    def fail(self, msg, t=None):
        t = t or self.peek()
        raise ParseError(msg, t[2], t[3])

    def parse(self):
        v = self.expr()
        if self.peek()[0] != "end" and self.peek()[1] not in (",", "=", ")"):
            self.fail("unexpected %r" % self.peek()[1])
        return v

    def expr(self):
        v = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            t = self.take()
            w = self.unary()
            if t[1] == "*":
                v = v * w
            else:
                if not w.is_scalar():
                    self.fail("division by a non-scalar", t)
                c = w.scalar_value()
                if not c:
                    self.fail("division by zero", t)
                v = v * (self.field.one / c)
        return v

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in ("+", "-"):
            self.take()
            v = self.unary()
            return -v if t[1] == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            t = self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            e = self.peek()
            if e[0] != "int":
                self.fail("exponent must be an integer", e)
            self.take()
            n = int(e[1])
            if neg:
                if not base.is_scalar() or not base.scalar_value():
                    self.fail("negative powers apply only to nonzero scalars", t)
                return NCPoly.scalar(base.scalar_value() ** (-n), self.field)
            if n < 1:
                self.fail("exponent must be positive", e)
            return base ** n
        return base

    def atom(self):
        t = self.peek()
        if t[0] == "int":
            self.take()
            return NCPoly.scalar(int(t[1]), self.field)
        if t[0] == "id":
            self.take()
            name = t[1]
            if name in self.gens:
                return NCPoly.word((self.gens[name],), self.field)
            if name in self.params:
                return NCPoly.scalar(self.params[name], self.field)
            if name in self.unbound:
                self.fail("unbound parameter %r" % name, t)
            if self.field.symbol == name:
                return NCPoly.scalar(self.field.gen, self.field)
            self.fail("unknown generator %r" % name, t)
        if t[1] == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        self.fail("unexpected %r" % (t[1] or "end of line"), t)


class Presentation:
    """A finitely presented graded algebra over an exact field."""

    def __init__(self, field, names, degrees, relations, params=None):
        self.field = field
        self.names = list(names)
        self.degrees = [tuple(d) for d in degrees]
        self.relations = list(relations)
        self.params = dict(params or {})
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        if self.degrees:
            k = len(self.degrees[0])
            if not 1 <= k <= 3 or any(len(d) != k for d in self.degrees):
                raise ValueError("generator degrees must share one length between 1 and 3")
            if any(d[0] < 1 for d in self.degrees):
                raise ValueError("generators need first-component degree >= 1")
        for r in self.relations:
            md = r.multidegree(self.degrees)
            if md is None:
                raise ValueError("relation %s is not homogeneous" % r.format(self.names))
            if md[0] < 2:
                raise ValueError("relation %s has degree < 2" % r.format(self.names))

    @property
    def ngens(self):
        return len(self.names)

    def gen_index(self, name):
        return self.names.index(name)

    def word_degree(self, w):
        return word_degree(w, self.degrees)

    def order_key(self, w):
        return (self.word_degree(w)[0], len(w), w)

    def __eq__(self, o):
        return (isinstance(o, Presentation) and self.field == o.field and self.names == o.names
                and self.degrees == o.degrees and self.relations == o.relations
                and self.params == o.params)

    def with_relations(self, rels):
        return Presentation(self.field, self.names, self.degrees, rels, self.params)

    def parse_poly(self, text, line=1):
        gens = {n: i for i, n in enumerate(self.names)}
        return _Expr(tokenize(text, line), self.field, gens, self.params).parse()

    def to_text(self):
        lines = ["field " + self.field.modulus_text()]
        for k, v in self.params.items():
            lines.append("param %s = %s" % (k, self.field.fmt(v)))
        for n, d in zip(self.names, self.degrees):
            lines.append("gen %s : (%s)" % (n, ",".join(str(x) for x in d)))
        for r in self.relations:
            lines.append("rel " + r.format(self.names, key=self.order_key))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return "Presentation(%d gens, %d rels)" % (self.ngens, len(self.relations))


def _parse_field(toks, line):
    ex = _Expr(toks, QQ, {}, {})
    t = ex.take()
    if t[0] != "id" or t[1] != "Q":
        ex.fail("field must be Q or Q[u]/(f)", t)
    if ex.peek()[0] == "end":
        return QQ
    ex.take("[")
    sym = ex.take()
    if sym[0] != "id":
        ex.fail("expected a field symbol", sym)
    ex.take("]")
    ex.take("/")
    ex.take("(")
    ex.gens = {sym[1]: 0}
    f = ex.expr()
    ex.take(")")
    if ex.peek()[0] != "end":
        ex.fail("unexpected %r" % ex.peek()[1])
    deg = max(len(w) for w in f.terms) if f.terms else 0
    coeffs = [f.terms.get((0,) * k, 0) for k in range(deg + 1)]
    try:
        return make_field(sym[1], coeffs)
    except FieldError as e:
        raise ParseError(str(e), line, toks[0][3])


def _parse_degree(ex):
    t = ex.peek()
    if t[0] == "int":
        ex.take()
        return (int(t[1]),)
    ex.take("(")
    out = []
    while True:
        neg = False
        if ex.peek()[1] == "-":
            ex.take()
            neg = True
        n = ex.take()
        if n[0] != "int":
            ex.fail("degree entries must be integers", n)
        out.append(-int(n[1]) if neg else int(n[1]))
        if ex.peek()[1] == ")":
            ex.take()
            return tuple(out)
        ex.take(",")


def parse_presentation(text):
    field = QQ
    params = {}
    unbound = set()
    names, degrees = [], []
    rels = []
    seen_field = False
    for ln, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        m = re.match(r"\s*(\S+)", body)
        kw = m.group(1)
        rest_col = m.end() + 1
        rest = body[m.end():]
        toks = tokenize(rest, ln, rest_col)
        if kw == "field":
            if seen_field or names or params:
                raise ParseError("field must be declared first and only once", ln, 1)
            field = _parse_field(toks, ln)
            seen_field = True
        elif kw == "param":
            ex = _Expr(toks, field, {n: i for i, n in enumerate(names)}, params, unbound)
            t = ex.take()
            if t[0] != "id":
                ex.fail("expected a parameter name", t)
            if t[1] in params or t[1] in names or t[1] == field.symbol:
                ex.fail("name %r already in use" % t[1], t)
            if ex.peek()[0] == "end":
                unbound.add(t[1])
                continue
            ex.take("=")
            v = ex.parse()
            if not v.is_scalar():
                ex.fail("parameter values must be scalars", t)
            params[t[1]] = v.scalar_value()
            unbound.discard(t[1])
        elif kw == "gen":
            ex = _Expr(toks, field, {}, {})
            new = []
            while True:
                t = ex.take()
                if t[0] != "id":
                    ex.fail("expected a generator name", t)
                if t[1] in names or t[1] in new or t[1] in params or t[1] == field.symbol:
                    ex.fail("name %r already in use" % t[1], t)
                new.append(t[1])
                if ex.peek()[1] != ",":
                    break
                ex.take()
            deg = (1,)
            if ex.peek()[1] == ":":
                ex.take()
                deg = _parse_degree(ex)
            if ex.peek()[0] != "end":
                ex.fail("unexpected %r" % ex.peek()[1])
            if deg[0] < 1:
                raise ParseError("generator degree must have first component >= 1", ln, toks[0][3])
            if degrees and len(deg) != len(degrees[0]):
                raise ParseError("all generator degrees need the same number of components", ln, toks[0][3])
            for n in new:
                names.append(n)
                degrees.append(deg)
        elif kw == "rel":
            if not names:
                raise ParseError("relations must follow generator declarations", ln, 1)
            ex = _Expr(toks, field, {n: i for i, n in enumerate(names)}, params, unbound)
            lhs = ex.expr()
            if ex.peek()[1] == "=":
                ex.take()
                lhs = lhs - ex.expr()
            if ex.peek()[0] != "end":
                ex.fail("unexpected %r" % ex.peek()[1])
            col = toks[0][3]
            if not lhs:
                raise ParseError("relation is zero", ln, col)
            md = lhs.multidegree(degrees)
            if md is None:
                raise ParseError("inhomogeneous relation (degrees %s)" % sorted(lhs.multidegrees(degrees)), ln, col)
            if md[0] < 2:
                raise ParseError("relation has degree < 2", ln, col)
            rels.append(lhs)
        else:
            raise ParseError("unknown directive %r" % kw, ln, m.start(1) + 1)
    if not names:
        raise ParseError("no generators declared")
    return Presentation(field, names, degrees, rels, params)


def load_presentation(path):
    with open(path) as fh:
        return parse_presentation(fh.read())


def parse_field(text):
    """Q or Q[u]/(quadratic) from its text form."""
    return _parse_field(tokenize(text, 1), 1)


def parse_scalar(text, field=QQ, params=None):
    """An exact scalar such as 3/4, -2, (1+2*i)/3 or 2^-3."""
    p = _Expr(tokenize(str(text), 1), field, {}, params or {}).parse()
    if not p.is_scalar():
        raise ParseError("expected a scalar", 1, 1)
    return p.scalar_value()
