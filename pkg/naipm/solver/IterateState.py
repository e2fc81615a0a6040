# coding: utf-8

class IterateState():
    """
    One primal-dual iterate (x, lam, s) with its residuals, centrality and
    convergence measures.  Fields not yet computed are None.
    """
    def __init__(self, x, lam, s, r_b=None, r_c=None, r_mu=None, mu=None,
                 rho=None):
        """
        Initializes an IterateState.

        Parameters
        ----------
        x, lam, s : BanVector
            The primal point, the equality multipliers and the dual slacks.
        r_b, r_c, r_mu : BanVector, optional
            Primal residual A x - b, dual residual A^T lam + s - Q x - c and
            complementarity products x * s.
        mu : Ban, optional
            Centrality x^T s / n.
        rho : tuple of Ban, optional
            The convergence measures (rho1, rho2, rho3).
        """
        self.x = x
        self.lam = lam
        self.s = s
        self.r_b = r_b
        self.r_c = r_c
        self.r_mu = r_mu
        self.mu = mu
        self.rho = rho

    def copy(self, **kwargs):
        """IterateState : A copy with the given fields replaced."""
        fields = dict(x=self.x, lam=self.lam, s=self.s, r_b=self.r_b, r_c=self.r_c,
                      r_mu=self.r_mu, mu=self.mu, rho=self.rho)
        fields.update(kwargs)
        return IterateState(**fields)

    def is_interior(self):
        """bool : True if every entry of x and s is strictly positive."""
        return all(v.sign() > 0 for v in self.x) and all(v.sign() > 0 for v in self.s)
