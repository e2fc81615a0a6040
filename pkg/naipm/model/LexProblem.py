# coding: utf-8
# Standard Python libraries
from collections import namedtuple
import json

# https://github.com/usnistgov/DataModelDict
from DataModelDict import DataModelDict as DM

# naipm imports
from ..ban import Ban, get_length
from ..linalg import BanVector, BanMatrix
from ..tools import aslist, uber_open_rmode

Objective = namedtuple('Objective', ['Q', 'c'])
Objective.__doc__ = 'One priority level: optional quadratic BanMatrix Q and linear BanVector c.'

Constraint = namedtuple('Constraint', ['a', 'rel', 'b'])
Constraint.__doc__ = 'One linear constraint row a x rel b.'

relations = ('<=', '=', '>=')
bound_kinds = ('nonneg', 'free')
senses = ('minimize', 'maximize')

class LexProblem():
    """
    Lexicographic multi-objective linear or quadratic program.  Objectives are
    listed by decreasing priority.
    """
    def __init__(self, model=None, sense='minimize', objectives=None,
                 constraints=None, bounds=None, name=None, negated=False,
                 levels=None, embedding=True, length=None):
        """
        Initializes a LexProblem.

        Parameters
        ----------
        model : str, file-like object or DataModelDict, optional
            Problem file content or path to load.  Cannot be given with any
            of the other problem parameters.
        sense : str, optional
            'minimize' (default) or 'maximize'.
        objectives : list of Objective or tuple, optional
            The (Q, c) pairs by decreasing priority.  Q may be None.
        constraints : list of Constraint or tuple, optional
            The (a, rel, b) rows with rel one of '<=', '=', '>='.
        bounds : list of str, optional
            'nonneg' or 'free' per variable.  Default is all 'nonneg'.
        name : str, optional
            A label used in reports.
        negated : bool, optional
            True if the objective was negated to turn a maximization into
            a minimization.  Set by scalarize_lex.
        levels : int, optional
            The number of priority levels the objective encodes.  Default
            value is the number of objectives.
        embedding : bool, optional
            False declares the problem feasible and bounded, so that the
            automatic embedding mode solves it as it is.  Default value is
            True.
        length : int, optional
            The Ban length used for all values.  Default is the process-wide
            length.
        """
        if length is None:
            length = get_length()
        self.__length = int(length)

        if model is not None:
            if (objectives is not None or constraints is not None
                or bounds is not None or name is not None):
                raise TypeError('model cannot be given with any other parameter')
            self.load(model)
        else:
            self.name = name
            self.sense = sense
            self.__negated = bool(negated)
            self.__objectives = [self.__objective(o) for o in aslist(objectives if objectives is not None else [])]
            self.__constraints = [self.__constraint(r) for r in aslist(constraints if constraints is not None else [])]
            self.__levels = levels
            self.embedding = embedding
            self.bounds = bounds
            self.validate()

    def __objective(self, objective):
        Q, c = objective
        c = BanVector(c, length=self.__length)
        if Q is not None:
            Q = BanMatrix(Q, length=self.__length, shape=(c.size, c.size))
            if Q.is_zero():
                Q = None
        return Objective(Q, c)

    def __constraint(self, constraint):
        a, rel, b = constraint
        if rel not in relations:
            raise ValueError(f'unknown constraint relation {rel!r}, expected one of {relations}')
        return Constraint(BanVector(a, length=self.__length), rel,
                          Ban.coerce(b, self.__length))

    @property
    def length(self):
        """int : The Ban length of all problem values."""
        return self.__length

    @property
    def name(self):
        """str or None : A label used in reports."""
        return self.__name

    @name.setter
    def name(self, value):
        if value is None:
            self.__name = None
        else:
            self.__name = str(value)

    @property
    def sense(self):
        """str : 'minimize' or 'maximize'."""
        return self.__sense

    @sense.setter
    def sense(self, value):
        if value not in senses:
            raise ValueError(f'unknown sense {value!r}, expected one of {senses}')
        self.__sense = value

    @property
    def objectives(self):
        """list of Objective : The (Q, c) pairs by decreasing priority."""
        return self.__objectives

    @property
    def constraints(self):
        """list of Constraint : The (a, rel, b) rows."""
        return self.__constraints

    @property
    def bounds(self):
        """list of str : 'nonneg' or 'free' per variable."""
        return self.__bounds

    @bounds.setter
    def bounds(self, value):
        if value is None:
            value = ['nonneg'] * self.n
        value = aslist(value)
        for kind in value:
            if kind not in bound_kinds:
                raise ValueError(f'unknown bound {kind!r}, expected one of {bound_kinds}')
        self.__bounds = list(value)

    @property
    def negated(self):
        """bool : True if a maximization was turned into a minimization."""
        return self.__negated

    @property
    def embedding(self):
        """bool : False if the problem is declared feasible and bounded."""
        return self.__embedding

    @embedding.setter
    def embedding(self, value):
        self.__embedding = bool(value)

    @property
    def levels(self):
        """int : The number of priority levels the objectives encode."""
        if self.__levels is None:
            return len(self.__objectives)
        return self.__levels

    @property
    def n(self):
        """int : The number of variables."""
        if len(self.__objectives) > 0:
            return self.__objectives[0].c.size
        elif len(self.__constraints) > 0:
            return self.__constraints[0].a.size
        return 0

    @property
    def m(self):
        """int : The number of constraints."""
        return len(self.__constraints)

    def validate(self):
        """
        Checks dimensions and exact symmetry of every Q.

        Raises
        ------
        ValueError
            If there are no objectives, if sizes disagree or if a Q is not
            symmetric.
        """
        if len(self.__objectives) == 0:
            raise ValueError('problem needs at least one objective')
        n = self.n
        for k, objective in enumerate(self.__objectives):
            if objective.c.size != n:
                raise ValueError(f'objective {k}: c has {objective.c.size} entries, expected {n}')
            if objective.Q is not None:
                if objective.Q.shape != (n, n):
                    raise ValueError(f'objective {k}: Q has shape {objective.Q.shape}, expected {(n, n)}')
                if not objective.Q.is_symmetric():
                    raise ValueError(f'objective {k}: Q is not symmetric')
        for i, constraint in enumerate(self.__constraints):
            if constraint.a.size != n:
                raise ValueError(f'constraint {i}: a has {constraint.a.size} entries, expected {n}')
        if len(self.__bounds) != n:
            raise ValueError(f'bounds has {len(self.__bounds)} entries, expected {n}')

    def load(self, model):
        """
        Loads the problem from a problem file.

        Parameters
        ----------
        model : str, file-like object or DataModelDict
            Model content or file path to model content.

        Raises
        ------
        ValueError
            For malformed JSON (the message gives line and column) or bad
            field values (the message names the field).
        """
        if isinstance(model, DM):
            pass
        elif isinstance(model, dict):
            model = DM(json.dumps(model))
        else:
            with uber_open_rmode(model) as f:
                content = f.read()
            if isinstance(content, bytes):
                content = content.decode('utf-8')
            try:
                json.loads(content)
            except json.JSONDecodeError as err:
                raise ValueError(f'problem file is not valid JSON: {err.msg} '
                                 f'at line {err.lineno} column {err.colno}') from err
            model = DM(content)

        if 'problem' in model:
            problem = model['problem']
        else:
            problem = model

        if 'objectives' not in problem:
            raise ValueError('problem needs at least one objective')
        if 'constraints' not in problem:
            problem['constraints'] = []

        self.name = problem.get('name', None)
        self.sense = problem.get('sense', 'minimize')
        self.__negated = bool(problem.get('negated', False))
        self.__levels = problem.get('levels', None)
        self.embedding = problem.get('embedding', True)

        def parsed(path, build, value):
            try:
                return build(value)
            except ValueError as err:
                raise ValueError(f'{path}: {err}') from err

        def vector(values):
            return BanVector([self.__literal(v) for v in aslist(values)], length=self.__length)

        def matrix(rows):
            return BanMatrix([[self.__literal(v) for v in aslist(row)] for row in aslist(rows)],
                             length=self.__length)

        self.__objectives = []
        for k, objective in enumerate(problem.iteraslist('objectives')):
            c = parsed(f'objectives[{k}].c', vector, objective['c'])
            Q = objective.get('Q', None)
            if Q is not None:
                Q = parsed(f'objectives[{k}].Q', matrix, Q)
            self.__objectives.append(self.__objective((Q, c)))

        self.__constraints = []
        for i, constraint in enumerate(problem.iteraslist('constraints')):
            row = (parsed(f'constraints[{i}].a', vector, constraint['a']),
                   constraint['rel'],
                   parsed(f'constraints[{i}].b', self.__literal, constraint['b']))
            self.__constraints.append(parsed(f'constraints[{i}]', self.__constraint, row))

        self.bounds = problem.get('bounds', None)
        self.validate()

    def __literal(self, value):
        if isinstance(value, str):
            return Ban.parse(value, length=self.__length)
        return Ban.coerce(value, self.__length)

    def asmodel(self):
        """
        Returns the problem as data model content.

        Returns
        -------
        DataModelDict
            Values are written as BAN literals.
        """
        model = DM()
        model['problem'] = problem = DM()
        if self.name is not None:
            problem['name'] = self.name
        problem['sense'] = self.sense
        if self.negated:
            problem['negated'] = True
        if self.__levels is not None:
            problem['levels'] = self.__levels
        if not self.embedding:
            problem['embedding'] = False

        problem['objectives'] = []
        for objective in self.objectives:
            entry = DM()
            if objective.Q is not None:
                entry['Q'] = objective.Q.format()
            entry['c'] = objective.c.format()
            problem['objectives'].append(entry)

        problem['constraints'] = []
        for constraint in self.constraints:
            entry = DM()
            entry['a'] = constraint.a.format()
            entry['rel'] = constraint.rel
            entry['b'] = constraint.b.format()
            problem['constraints'].append(entry)

        problem['bounds'] = list(self.bounds)
        return model
