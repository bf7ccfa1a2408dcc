"""Dense exact linear algebra over the radical field.

Only what the coupling engine needs: reduced row echelon form, null
spaces, and Gram-Schmidt under a caller-supplied symmetric form.  No
general eigensolving; the chain transforms only ever need null spaces
of shifted matrices.
"""

from fractions import Fraction

from .errors import DegenerateForm
from .exact import RS_ONE, RS_ZERO, RadicalSum, root_of_rational, rs


class ExactMatrix:
    """Dense matrix of RadicalSum entries."""

    def __init__(self, rows, ncols=None):
        self.rows = [[rs(x) for x in row] for row in rows]
        if self.rows:
            self._ncols = len(self.rows[0])
            if any(len(r) != self._ncols for r in self.rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != self._ncols:
                raise ValueError("ncols does not match the rows")
        else:
            self._ncols = ncols or 0
        self._rref = None

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return self._ncols

    @staticmethod
    def zeros(nr, nc):
        return ExactMatrix([[RS_ZERO] * nc for _ in range(nr)], ncols=nc)

    def matvec(self, v):
        return [vec_dot(row, v) for row in self.rows]

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column list).

        The RREF itself is the canonical one (unique for given column
        order).  Within a pivot column we eliminate using the candidate
        row whose entry has the fewest radical terms; that only affects
        intermediate work, not the result.
        """
        if self._rref is not None:
            return self._rref
        m = [list(row) for row in self.rows]
        nr = len(m)
        nc = self.ncols
        pivots = []
        pr = 0
        for col in range(nc):
            if pr >= nr:
                break
            cands = [i for i in range(pr, nr) if not m[i][col].is_zero()]
            if not cands:
                continue
            best = min(cands, key=lambda i: (m[i][col].n_terms(), i))
            m[pr], m[best] = m[best], m[pr]
            inv = m[pr][col].invert()
            m[pr] = [x * inv for x in m[pr]]
            for i in range(nr):
                if i != pr and not m[i][col].is_zero():
                    f = m[i][col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[pr])]
            pivots.append(col)
            pr += 1
        self._rref = (ExactMatrix(m, ncols=nc), pivots)
        return self._rref

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        """Canonical null-space basis from the RREF free columns.

        One basis vector per free column, with entry 1 at its free
        column, 0 at the other free columns, and the negated RREF
        entries at the pivot columns.  Free columns are taken in
        descending order, so the first basis vector is the one carrying
        the unit entry at the highest column position; downstream this
        makes the first resolved multiplicity channel the one built on
        the highest-weight coefficient.
        """
        red, pivots = self.rref()
        nc = self.ncols
        pivset = set(pivots)
        free = [c for c in range(nc - 1, -1, -1) if c not in pivset]
        basis = []
        for f in free:
            v = [RS_ZERO] * nc
            v[f] = RS_ONE
            for i, pc in enumerate(pivots):
                entry = red.rows[i][f]
                if not entry.is_zero():
                    v[pc] = -entry
            basis.append(v)
        return basis


def vec_dot(u, v):
    out = RS_ZERO
    for a, b in zip(u, v):
        if not a.is_zero() and not b.is_zero():
            out = out + a * b
    return out


def form_dot(u, v, form):
    """<u, v> under the symmetric bilinear form (a matrix or None)."""
    if form is None:
        return vec_dot(u, v)
    return vec_dot(u, form.matvec(v))


def gram_schmidt(vectors, form=None):
    """Orthonormalize under the given form, preserving the span.

    The first output is a positive multiple of the first input, so the
    input's sign survives.  Squared norms must come out as positive
    rationals (they do for the inner products arising here); otherwise
    DegenerateForm is raised.
    """
    out = []
    for v in vectors:
        u = list(v)
        for w in out:
            ov = form_dot(w, v, form)
            if not ov.is_zero():
                u = [a - ov * b for a, b in zip(u, w)]
        n2 = form_dot(u, u, form)
        try:
            q = n2.rational()
        except ValueError:
            raise DegenerateForm("irrational squared norm %s" % n2) from None
        if q <= 0:
            raise DegenerateForm("squared norm %s is not positive" % q)
        inv_norm = RadicalSum.zero() + root_of_rational(Fraction(1), Fraction(1) / q)
        out.append([x * inv_norm for x in u])
    return out
