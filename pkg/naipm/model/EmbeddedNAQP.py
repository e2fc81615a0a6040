# coding: utf-8
# naipm imports
from ..ban import Ban
from .NAQP import NAQP

class EmbeddedNAQP(NAQP):
    """
    An NAQP enlarged with one artificial column, one slack column and one
    bounding row so that it is strictly feasible and bounded.  Keeps the
    problem it was built from to report results in its coordinates.
    """
    def __init__(self, Q, c, A, b, source, bound_weight, artificial_cost, **kwargs):
        """
        Initializes an EmbeddedNAQP.  Built by naipm.model.embed.

        Parameters
        ----------
        Q, c, A, b
            The enlarged standard-form data.
        source : NAQP
            The problem that was embedded.
        bound_weight : Ban
            The weight whose negation is the bounding row right-hand side.
        artificial_cost : Ban
            The cost of the artificial column.
        **kwargs : any, optional
            Passed on to NAQP.
        """
        super().__init__(Q, c, A, b, **kwargs)
        self.__source = source
        self.__bound_weight = Ban.coerce(bound_weight, self.length)
        self.__artificial_cost = Ban.coerce(artificial_cost, self.length)

    @property
    def source(self):
        """NAQP : The problem that was embedded."""
        return self.__source

    @property
    def bound_weight(self):
        """Ban : The bounding row weight, b[-1] is its negation."""
        return self.__bound_weight

    @property
    def artificial_cost(self):
        """Ban : The cost attached to the artificial column."""
        return self.__artificial_cost

    @property
    def priority_levels(self):
        """
        int : The levels of the source objective plus the penalty level of
        the artificial cost, which is optimized first.
        """
        return self.levels + 1

    @property
    def artificial_index(self):
        """int : The column of the artificial variable."""
        return self.__source.n

    @property
    def slack_index(self):
        """int : The slack column of the bounding row."""
        return self.__source.n + 1

    @property
    def bound_row(self):
        """int : The row index of the bounding row."""
        return self.__source.m

    def restore(self, x):
        """
        Maps an embedded point back to the original variables of the source
        problem.

        Parameters
        ----------
        x : BanVector
            A point with n entries.

        Returns
        -------
        BanVector
        """
        return self.__source.restore(x[:self.__source.n])

    def asmodel(self):
        """
        Returns the embedded problem as data model content.

        Returns
        -------
        DataModelDict
        """
        model = super().asmodel()
        problem = model['standard-problem']
        problem['bound-weight'] = self.__bound_weight.format()
        problem['artificial-cost'] = self.__artificial_cost.format()
        problem['artificial-index'] = self.artificial_index
        problem['slack-index'] = self.slack_index
        problem['bound-row'] = self.bound_row
        return model
