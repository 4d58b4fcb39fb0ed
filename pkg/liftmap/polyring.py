# liftmap/polyring.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.
#
# This is free software, and you are welcome to redistribute it under
# certain conditions; see the end of this file for copyright
# information, grant of license, and disclaimer of warranty.

""" Sparse multivariate polynomials over an exact coefficient field.

    A `VarContext` fixes the ordered variables X₁,…,Xₙ and the field K.
    A monomial is a tuple of ``n`` nonnegative exponents. A
    `Polynomial` maps monomials to nonzero raw canonical coefficients
    (see `liftmap.scalars`); it is immutable and compares structurally.

    Every element of the power series ring R or of a quotient A = R/𝔞
    is represented by a polynomial; equality in A is decided by the
    `liftmap.stdbasis` module.
    """

from fractions import Fraction
import math
import re

from .scalars import (Scalar, ScalarZeroDivisionError, format_raw)


class PolynomialError(Exception):
    """ Base exception class for errors from this module. """


class VarContextError(PolynomialError, ValueError):
    """ Exception raised when a variable context is invalid. """


class PolynomialSyntaxError(PolynomialError, ValueError):
    """ Exception raised when polynomial text cannot be parsed. """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class UnknownVariableError(PolynomialSyntaxError):
    """ Exception raised when polynomial text names an unknown variable. """


class CoefficientError(PolynomialSyntaxError):
    """ Exception raised when a coefficient literal is not in the field. """


class ContextMismatchError(PolynomialError, ValueError):
    """ Exception raised when operands belong to different contexts. """


class VariableMapError(PolynomialError, ValueError):
    """ Exception raised when a variable map violates its invariants. """


class SingularMatrixError(PolynomialError, ArithmeticError):
    """ Exception raised when inverting a singular matrix. """



infinity = math.inf

variable_name_regex = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


class VarContext:
    """ The ordered variables and coefficient field of a polynomial ring.

        `names`
            Tuple of distinct variable identifiers, ``n ≥ 1`` of them.

        `field`
            The `FieldSpec` of the coefficients.
        """

    __slots__ = ('names', 'field', '_index')

    def __init__(self, names, field):
        """ Set up a new instance.

            :param names: Sequence of variable names.
            :param field: The coefficient `FieldSpec`.
            :raises VarContextError: If the names are empty, invalid,
                or repeated.
            """
        names = tuple(names)
        if not names:
            raise VarContextError("A context needs at least one variable")
        for name in names:
            if not variable_name_regex.match(name):
                raise VarContextError(
                        "Invalid variable name: {name!r}".format(name=name))
        if len(set(names)) != len(names):
            raise VarContextError(
                    "Repeated variable names: {names!r}".format(names=names))
        self.names = names
        self.field = field
        self._index = {name: index for (index, name) in enumerate(names)}

    def __eq__(self, other):
        if not isinstance(other, VarContext):
            return NotImplemented
        return self.names == other.names and self.field == other.field

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return "VarContext({names!r}, {field!r})".format(
                names=list(self.names), field=self.field)

    @property
    def nvars(self):
        """ The number of variables, ``n``. """
        return len(self.names)

    def index(self, name):
        """ Position of the variable `name`.

            :raises UnknownVariableError: If `name` is not a variable of
                this context.
            """
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(
                    "Unknown variable: {name!r}".format(name=name))

    def zero(self):
        """ The zero polynomial. """
        return Polynomial._make(self, {})

    def one(self):
        """ The unit polynomial. """
        return self.constant(1)

    def constant(self, value):
        """ The constant polynomial with raw `value`. """
        return Polynomial(self, {self.unit_monomial(): value})

    def unit_monomial(self):
        """ The exponent tuple of the monomial 1. """
        return (0,) * self.nvars

    def monomial(self, exponents, coefficient=1):
        """ The term `coefficient` · X^`exponents`. """
        return Polynomial(self, {tuple(exponents): coefficient})

    def variable(self, which):
        """ The polynomial Xᵢ, for a variable index or name. """
        if isinstance(which, str):
            which = self.index(which)
        exponents = [0] * self.nvars
        exponents[which] = 1
        return Polynomial._make(self, {tuple(exponents): self.field.one})

    def variables(self):
        """ List of all variables as polynomials, in order. """
        return [self.variable(index) for index in range(self.nvars)]



def monomial_degree(monomial):
    """ Total degree of a monomial. """
    return sum(monomial)


def monomial_mul(a, b):
    """ Product of monomials `a` and `b`. """
    return tuple(x + y for (x, y) in zip(a, b))


def monomial_divides(a, b):
    """ ``True`` iff monomial `a` divides monomial `b`. """
    return all(x <= y for (x, y) in zip(a, b))


def monomial_quotient(b, a):
    """ The monomial `b` / `a`; `a` must divide `b`. """
    return tuple(y - x for (x, y) in zip(a, b))


def monomial_lcm(a, b):
    """ Least common multiple of monomials `a` and `b`. """
    return tuple(max(x, y) for (x, y) in zip(a, b))


def monomial_is_coprime(a, b):
    """ ``True`` iff monomials `a` and `b` share no variable. """
    return not any(x and y for (x, y) in zip(a, b))


def monomial_support(monomial):
    """ Set of variable indices occurring in a monomial. """
    return frozenset(
            index for (index, exponent) in enumerate(monomial) if exponent)


def degrevlex_key(monomial):
    """ Sort key for the graded reverse lexicographic ordering. """
    return (sum(monomial), tuple(-exponent for exponent in reversed(monomial)))


def monomials_of_degree(nvars, degree):
    """ All monomials in `nvars` variables of total `degree`.

        :return: A list of exponent tuples in descending degrevlex
            order.
        """
    if nvars == 1:
        return [(degree,)]
    result = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            result.append((first,) + rest)
    result.sort(key=degrevlex_key, reverse=True)
    return result


def format_monomial(monomial, names):
    """ Text of a monomial, ``''`` for the monomial 1. """
    factors = []
    for (name, exponent) in zip(names, monomial):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append("{name}^{exponent:d}".format(
                    name=name, exponent=exponent))
    return "*".join(factors)



class MonomialOrder:
    """ A monomial ordering on the monomials of a context.

        `kind`
            `degrevlex_global`: graded reverse lexicographic, a
            well-ordering with 1 smallest; or `degrevlex_local`:
            negative degree reverse lexicographic, a local ordering with
            1 largest.

        `key` maps a monomial to a sort key; larger keys are larger
        monomials.
        """

    degrevlex_global = 'DegRevLexGlobal'
    degrevlex_local = 'DegRevLexLocal'

    __slots__ = ('kind', 'context', 'key')

    def __init__(self, kind, context):
        if kind == self.degrevlex_global:
            key = degrevlex_key
        elif kind == self.degrevlex_local:
            key = _negdegrevlex_key
        else:
            raise ValueError("Unknown ordering: {kind!r}".format(kind=kind))
        self.kind = kind
        self.context = context
        self.key = key

    def __eq__(self, other):
        if not isinstance(other, MonomialOrder):
            return NotImplemented
        return (self.kind, self.context) == (other.kind, other.context)

    def __hash__(self):
        return hash((self.kind, self.context))

    def __repr__(self):
        return "MonomialOrder({kind!r})".format(kind=self.kind)

    @property
    def is_global(self):
        """ ``True`` iff this is a well-ordering. """
        return self.kind == self.degrevlex_global

    @property
    def is_local(self):
        """ ``True`` iff 1 is larger than every other monomial. """
        return self.kind == self.degrevlex_local

    def compare(self, a, b):
        """ ``-1``, ``0`` or ``1`` as monomial `a` is <, =, > `b`. """
        (key_a, key_b) = (self.key(a), self.key(b))
        return (key_a > key_b) - (key_a < key_b)

    def leading_monomial(self, polynomial):
        """ The largest monomial of a nonzero `polynomial`. """
        return max(polynomial.coefficients, key=self.key)

    def leading_term(self, polynomial):
        """ Pair (monomial, raw coefficient) of the leading term. """
        monomial = max(polynomial.coefficients, key=self.key)
        return (monomial, polynomial.coefficients[monomial])


def _negdegrevlex_key(monomial):
    return (
            -sum(monomial),
            tuple(-exponent for exponent in reversed(monomial)))


def degrevlex(context):
    """ The global graded reverse lexicographic ordering. """
    return MonomialOrder(MonomialOrder.degrevlex_global, context)


def negdegrevlex(context):
    """ The local negative degree reverse lexicographic ordering. """
    return MonomialOrder(MonomialOrder.degrevlex_local, context)



class Polynomial:
    """ A sparse polynomial over the field of its `VarContext`.

        `context`
            The `VarContext` of the polynomial.

        `coefficients`
            Mapping from exponent tuple to nonzero raw canonical
            coefficient. Treat it as read-only.

        The canonical term order, used for printing and iteration, is
        descending graded reverse lexicographic, independent of any
        ordering used for computation.
        """

    __slots__ = ('context', 'coefficients', '_hash')

    def __init__(self, context, coefficients=None):
        """ Set up a new instance.

            :param context: The `VarContext`.
            :param coefficients: Mapping from exponent tuple to integer,
                `Fraction`, or `Scalar` coefficient.
            :raises ContextMismatchError: If an exponent tuple has the
                wrong length.
            """
        field = context.field
        canonical = {}
        for (monomial, value) in (coefficients or {}).items():
            monomial = tuple(monomial)
            if len(monomial) != context.nvars:
                raise ContextMismatchError(
                        "Monomial {monomial!r} does not fit {context!r}".format(
                            monomial=monomial, context=context))
            if isinstance(value, Scalar):
                value = value.value
            value = field.reduce(value)
            if monomial in canonical:
                value = field.add(canonical[monomial], value)
            if value:
                canonical[monomial] = value
            else:
                canonical.pop(monomial, None)
        self.context = context
        self.coefficients = canonical
        self._hash = None

    @classmethod
    def _make(cls, context, coefficients):
        """ Make an instance from already-canonical `coefficients`. """
        instance = object.__new__(cls)
        instance.context = context
        instance.coefficients = coefficients
        instance._hash = None
        return instance

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (
                    self.context == other.context
                    and self.coefficients == other.coefficients)
        if isinstance(other, (int, Fraction, Scalar)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                    (self.context, frozenset(self.coefficients.items())))
        return self._hash

    def __bool__(self):
        return bool(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __repr__(self):
        return "Polynomial({text!r})".format(text=format_polynomial(self))

    def __str__(self):
        return format_polynomial(self)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.context != self.context:
                raise ContextMismatchError(
                        "Context mismatch: {a!r} and {b!r}".format(
                            a=self.context, b=other.context))
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return self.context.constant(other)
        raise TypeError("Cannot combine Polynomial with {kind}".format(
                kind=type(other).__name__))

    def __add__(self, other):
        other = self._coerce(other)
        field = self.context.field
        result = dict(self.coefficients)
        for (monomial, value) in other.coefficients.items():
            existing = result.get(monomial)
            if existing is None:
                result[monomial] = value
                continue
            value = field.add(existing, value)
            if value:
                result[monomial] = value
            else:
                del result[monomial]
        return Polynomial._make(self.context, result)

    __radd__ = __add__

    def __neg__(self):
        field = self.context.field
        return Polynomial._make(self.context, {
                monomial: field.neg(value)
                for (monomial, value) in self.coefficients.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            if isinstance(other, Scalar):
                other = other.value
            return self.scale(self.context.field.reduce(other))
        other = self._coerce(other)
        field = self.context.field
        result = {}
        for (monomial_a, value_a) in self.coefficients.items():
            for (monomial_b, value_b) in other.coefficients.items():
                monomial = tuple(
                        x + y for (x, y) in zip(monomial_a, monomial_b))
                value = field.mul(value_a, value_b)
                existing = result.get(monomial)
                if existing is not None:
                    value = field.add(existing, value)
                result[monomial] = value
        return Polynomial._make(self.context, {
                monomial: value
                for (monomial, value) in result.items() if value})

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Exponent must be a nonnegative integer")
        result = self.context.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, value):
        """ Product of this polynomial with raw field `value`. """
        if not value:
            return self.context.zero()
        field = self.context.field
        return Polynomial._make(self.context, {
                monomial: field.mul(coefficient, value)
                for (monomial, coefficient) in self.coefficients.items()})

    def mul_term(self, monomial, value):
        """ Product of this polynomial with the term `value` · X^`monomial`.
            """
        if not value:
            return self.context.zero()
        field = self.context.field
        return Polynomial._make(self.context, {
                tuple(x + y for (x, y) in zip(term, monomial)):
                    field.mul(coefficient, value)
                for (term, coefficient) in self.coefficients.items()})

    def items(self):
        """ List of (monomial, raw coefficient) in canonical order. """
        return sorted(
                self.coefficients.items(),
                key=lambda item: degrevlex_key(item[0]), reverse=True)

    def terms(self):
        """ List of (monomial, `Scalar`) in canonical order. """
        field = self.context.field
        return [
                (monomial, Scalar(field, value))
                for (monomial, value) in self.items()]

    def coefficient(self, monomial):
        """ The coefficient of `monomial`, as a `Scalar`. """
        return Scalar(
                self.context.field,
                self.coefficients.get(tuple(monomial), 0))

    def constant_term(self):
        """ The raw constant coefficient. """
        return self.coefficients.get(
                self.context.unit_monomial(), self.context.field.zero)

    def total_degree(self):
        """ Largest total degree of a term; ``-1`` for zero. """
        if not self.coefficients:
            return -1
        return max(sum(monomial) for monomial in self.coefficients)

    def is_homogeneous(self):
        """ ``True`` iff every term has the same total degree. """
        return len({sum(monomial) for monomial in self.coefficients}) <= 1

    def homogeneous_component(self, degree):
        """ The sum of the terms of total degree `degree`. """
        return Polynomial._make(self.context, {
                monomial: value
                for (monomial, value) in self.coefficients.items()
                if sum(monomial) == degree})

    def support(self):
        """ Set of variable indices occurring in this polynomial. """
        result = set()
        for monomial in self.coefficients:
            result |= monomial_support(monomial)
        return frozenset(result)

    def ecart(self, order):
        """ Total degree minus degree of the leading monomial. """
        return self.total_degree() - sum(order.leading_monomial(self))

    def monic(self, order):
        """ This polynomial scaled so its leading coefficient is 1. """
        if not self.coefficients:
            return self
        (monomial, value) = order.leading_term(self)
        return self.scale(self.context.field.inv(value))


def add(p, q):
    """ Canonical sum of polynomials in the same context.

        :raises ContextMismatchError: If the contexts differ.
        """
    return p + q


def mul(p, q):
    """ Canonical product of polynomials in the same context.

        :raises ContextMismatchError: If the contexts differ.
        """
    return p * q


def linear_part(polynomial):
    """ The degree-1 homogeneous component of `polynomial`. """
    return polynomial.homogeneous_component(1)


def order_of_vanishing(polynomial):
    """ Minimal total degree of a term; `infinity` for zero. """
    if not polynomial.coefficients:
        return infinity
    return min(sum(monomial) for monomial in polynomial.coefficients)



class VariableMap:
    """ A K-algebra homomorphism given by the images of the variables.

        `context`
            The `VarContext` of the source ring.

        `images`
            Tuple of ``n`` polynomials, the images of X₁,…,Xₙ.

        `target`
            The `VarContext` of the images; by default the source
            context, making the map a self map.

        `coefficient_action`
            How the map acts on K. Only `identity_action` exists: ℚ has
            no other endomorphism and the Frobenius of 𝔽ₚ is trivial.

        Every image has zero constant term, so the map sends the
        maximal ideal into the maximal ideal.
        """

    identity_action = 'Identity'

    __slots__ = ('context', 'images', 'target', 'coefficient_action')

    def __init__(
            self, context, images, target=None,
            coefficient_action=identity_action):
        """ Set up a new instance.

            :raises VariableMapError: If the number of images is wrong,
                an image lies in another context, an image has a nonzero
                constant term, or the coefficient action is unknown.
            """
        if target is None:
            target = context
        images = tuple(images)
        if len(images) != context.nvars:
            raise VariableMapError(
                    "Expected {n:d} images, got {count:d}".format(
                        n=context.nvars, count=len(images)))
        for (name, image) in zip(context.names, images):
            if not isinstance(image, Polynomial) or image.context != target:
                raise VariableMapError(
                        "Image of {name} is not in the target ring".format(
                            name=name))
            if image.constant_term():
                raise VariableMapError(
                        "Image of {name} has nonzero constant term:"
                        " {image}".format(name=name, image=image))
        if coefficient_action != self.identity_action:
            raise VariableMapError(
                    "Unsupported coefficient action: {action!r}".format(
                        action=coefficient_action))
        self.context = context
        self.images = images
        self.target = target
        self.coefficient_action = coefficient_action

    @classmethod
    def identity(cls, context):
        """ The identity self map of `context`. """
        return cls(context, context.variables())

    def __eq__(self, other):
        if not isinstance(other, VariableMap):
            return NotImplemented
        return (
                (self.context, self.target, self.images)
                == (other.context, other.target, other.images))

    def __hash__(self):
        return hash((self.context, self.target, self.images))

    def __repr__(self):
        return "VariableMap({pairs})".format(pairs=", ".join(
                "{name} -> {image}".format(name=name, image=image)
                for (name, image) in zip(self.context.names, self.images)))

    def __call__(self, polynomial):
        return substitute(polynomial, self)

    def is_self_map(self):
        """ ``True`` iff source and target contexts coincide. """
        return self.context == self.target

    def compose(self, outer):
        """ The map x ↦ `outer`(self(x)).

            :param outer: A `VariableMap` whose source is this map's
                target.
            :return: A `VariableMap` from this map's source to
                `outer`'s target.
            :raises ContextMismatchError: If the contexts do not chain.
            """
        images = [substitute(image, outer) for image in self.images]
        return VariableMap(self.context, images, target=outer.target)


def substitute(polynomial, variable_map):
    """ Image of `polynomial` under the homomorphism `variable_map`.

        :param polynomial: A `Polynomial` in the map's source context.
        :param variable_map: The `VariableMap` sending Xᵢ to its i-th
            image.
        :return: The image, in the map's target context.
        :raises ContextMismatchError: If the contexts differ.
        """
    if polynomial.context != variable_map.context:
        raise ContextMismatchError(
                "Cannot substitute into {a!r} with a map from {b!r}".format(
                    a=polynomial.context, b=variable_map.context))
    target = variable_map.target
    powers = [{0: target.one()} for image in variable_map.images]

    def power(index, exponent):
        cache = powers[index]
        if exponent not in cache:
            cache[exponent] = (
                    power(index, exponent - 1) * variable_map.images[index])
        return cache[exponent]

    result = target.zero()
    for (monomial, value) in polynomial.items():
        term = target.constant(value)
        for (index, exponent) in enumerate(monomial):
            if exponent:
                term = term * power(index, exponent)
        result = result + term
    return result



def linear_coordinates(polynomial):
    """ Coefficient vector of the linear part of `polynomial`.

        :return: A list of ``n`` raw field values; entry ``i`` is the
            coefficient of Xᵢ.
        """
    context = polynomial.context
    vector = [context.field.zero] * context.nvars
    for (monomial, value) in polynomial.coefficients.items():
        if sum(monomial) == 1:
            vector[monomial.index(1)] = value
    return vector


def linear_form(vector, context):
    """ The linear polynomial Σ vectorᵢ·Xᵢ. """
    coefficients = {}
    for (index, value) in enumerate(vector):
        exponents = [0] * context.nvars
        exponents[index] = 1
        coefficients[tuple(exponents)] = value
    return Polynomial(context, coefficients)


class LinearSpan:
    """ An incrementally built subspace of Kⁿ in echelon form.

        Rows are kept with a unit pivot and zeros at every earlier
        pivot, so a vector is reduced by one pass in insertion order.
        """

    def __init__(self, field, dimension):
        self.field = field
        self.dimension = dimension
        self.rows = []

    @property
    def rank(self):
        """ Dimension of the span. """
        return len(self.rows)

    def reduce(self, vector):
        """ Residue of `vector` modulo the span. """
        field = self.field
        vector = list(vector)
        for (pivot, row) in self.rows:
            factor = vector[pivot]
            if factor:
                vector = [
                        field.sub(value, field.mul(factor, entry))
                        for (value, entry) in zip(vector, row)]
        return vector

    def contains(self, vector):
        """ ``True`` iff `vector` lies in the span. """
        return not any(self.reduce(vector))

    def insert(self, vector):
        """ Add `vector` to the span.

            :return: ``True`` iff the span grew.
            """
        residue = self.reduce(vector)
        for (pivot, value) in enumerate(residue):
            if value:
                break
        else:
            return False
        field = self.field
        inverse = field.inv(value)
        self.rows.append(
                (pivot, [field.mul(entry, inverse) for entry in residue]))
        return True


def linear_rank_extend(vectors, context=None):
    """ Rank of linear forms and a completion to a basis by variables.

        :param vectors: Sequence of homogeneous degree-1 polynomials.
        :param context: The `VarContext`; required when `vectors` is
            empty.
        :return: A tuple (`rank`, `completion`): the dimension of the
            span of `vectors`, and the list of coordinate variables,
            taken in variable order, each not in the span of the inputs
            and the variables before it, which together with the inputs
            span all linear forms.
        :raises ValueError: If an input is not linear.
        """
    vectors = list(vectors)
    if context is None:
        if not vectors:
            raise ValueError("Context required for an empty input")
        context = vectors[0].context
    span = LinearSpan(context.field, context.nvars)
    for vector in vectors:
        if vector.context != context:
            raise ContextMismatchError("Linear forms in different contexts")
        if any(sum(monomial) != 1 for monomial in vector.coefficients):
            raise ValueError("Not a linear form: {vector}".format(
                    vector=vector))
        span.insert(linear_coordinates(vector))
    rank = span.rank
    completion = []
    for index in range(context.nvars):
        if span.rank == context.nvars:
            break
        unit_vector = [context.field.zero] * context.nvars
        unit_vector[index] = context.field.one
        if span.insert(unit_vector):
            completion.append(context.variable(index))
    return (rank, completion)


def identity_matrix(field, size):
    """ The `size` × `size` identity matrix of raw values. """
    return [
            [field.one if row == column else field.zero
                for column in range(size)]
            for row in range(size)]


def matrix_product(a, b, field):
    """ Product of matrices `a` and `b` of raw values. """
    columns = list(zip(*b))
    result = []
    for row in a:
        result_row = []
        for column in columns:
            total = field.zero
            for (x, y) in zip(row, column):
                if x and y:
                    total = field.add(total, field.mul(x, y))
            result_row.append(total)
        result.append(result_row)
    return result


def matrix_inverse(matrix, field):
    """ Inverse of a square matrix of raw values, by Gauss–Jordan.

        :raises SingularMatrixError: If the matrix is not invertible.
        """
    size = len(matrix)
    augmented = [
            list(row) + identity_row
            for (row, identity_row) in zip(
                matrix, identity_matrix(field, size))]
    for column in range(size):
        for pivot_row in range(column, size):
            if augmented[pivot_row][column]:
                break
        else:
            raise SingularMatrixError("Matrix is singular")
        (augmented[column], augmented[pivot_row]) = (
                augmented[pivot_row], augmented[column])
        inverse = field.inv(augmented[column][column])
        augmented[column] = [
                field.mul(entry, inverse) for entry in augmented[column]]
        for row in range(size):
            factor = augmented[row][column]
            if row != column and factor:
                augmented[row] = [
                        field.sub(entry, field.mul(factor, pivot_entry))
                        for (entry, pivot_entry) in zip(
                            augmented[row], augmented[column])]
    return [row[size:] for row in augmented]


def linear_substitution(matrix, context):
    """ The self map Xᵢ ↦ Σⱼ matrix[i][j]·Xⱼ. """
    return VariableMap(
            context, [linear_form(row, context) for row in matrix])



token_regex = re.compile(
        r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)"
        r"|(?P<operator>[-+*/^]))")


def _tokenize(text):
    """ Split polynomial text into (kind, text, position) tokens. """
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            break
        match = token_regex.match(text, position)
        if match is None:
            raise PolynomialSyntaxError(
                    "Unexpected character {char!r} at position {pos:d}".format(
                        char=text[position], pos=position),
                    position=position)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(('end', '', len(text)))
    return tokens


class _Parser:
    """ Recursive descent parser for the polynomial grammar. """

    def __init__(self, text, context):
        self.text = text
        self.context = context
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, message, token):
        raise PolynomialSyntaxError(
                "{message} at position {pos:d}".format(
                    message=message, pos=token[2]),
                position=token[2])

    def expect_number(self):
        token = self.advance()
        if token[0] != 'number':
            self.fail("Expected a number", token)
        return token

    def parse_polynomial(self):
        field = self.context.field
        result = {}
        sign = 1
        token = self.peek()
        if token[:2] in {('operator', '-'), ('operator', '+')}:
            sign = -1 if token[1] == '-' else 1
            self.advance()
        while True:
            (monomial, value) = self.parse_term()
            if sign < 0:
                value = field.neg(value)
            result[monomial] = field.add(
                    result.get(monomial, field.zero), value)
            token = self.advance()
            if token[0] == 'end':
                break
            if token[:2] == ('operator', '+'):
                sign = 1
            elif token[:2] == ('operator', '-'):
                sign = -1
            else:
                self.fail("Expected '+' or '-'", token)
        return Polynomial(self.context, result)

    def parse_term(self):
        field = self.context.field
        exponents = [0] * self.context.nvars
        value = field.one
        while True:
            (factor_exponents, factor_value) = self.parse_factor()
            value = field.mul(value, factor_value)
            if factor_exponents is not None:
                exponents = [
                        x + y for (x, y) in zip(exponents, factor_exponents)]
            if self.peek()[:2] != ('operator', '*'):
                break
            self.advance()
        return (tuple(exponents), value)

    def parse_factor(self):
        field = self.context.field
        token = self.advance()
        if token[0] == 'number':
            numerator = int(token[1])
            if self.peek()[:2] != ('operator', '/'):
                return (None, field.reduce(numerator))
            self.advance()
            denominator_token = self.expect_number()
            denominator = int(denominator_token[1])
            try:
                if denominator == 0:
                    raise ScalarZeroDivisionError("Zero denominator")
                value = field.reduce(Fraction(numerator, denominator))
            except ScalarZeroDivisionError as exc:
                error = CoefficientError(
                        "Coefficient {a:d}/{b:d} at position {pos:d}"
                        " is not in {field}".format(
                            a=numerator, b=denominator, pos=token[2],
                            field=field),
                        position=token[2])
                raise error from exc
            return (None, value)
        if token[0] == 'name':
            if token[1] not in self.context.names:
                raise UnknownVariableError(
                        "Unknown variable {name!r} at position {pos:d}".format(
                            name=token[1], pos=token[2]),
                        position=token[2])
            exponents = [0] * self.context.nvars
            exponent = 1
            if self.peek()[:2] == ('operator', '^'):
                self.advance()
                exponent = int(self.expect_number()[1])
            exponents[self.context.index(token[1])] = exponent
            return (exponents, field.one)
        self.fail("Expected a coefficient or variable", token)


def parse(text, context):
    """ Parse polynomial text in the grammar of the problem file format.

        :param text: Terms joined by ``+`` / ``-``; a term is a
            product (``*``) of coefficients (``3``, ``1/2``) and
            variables with optional exponent (``X^2``).
        :param context: The `VarContext` to read into.
        :return: The canonical `Polynomial`.
        :raises PolynomialSyntaxError: On a syntax error, with the
            offending `position`.
        :raises UnknownVariableError: On an unknown variable name.
        :raises CoefficientError: On a coefficient not in the field.
        """
    return _Parser(text, context).parse_polynomial()


def format_polynomial(polynomial):
    """ Canonical text of `polynomial`; `parse` reads it back exactly. """
    if not polynomial.coefficients:
        return "0"
    names = polynomial.context.names
    rational = polynomial.context.field.is_rationals
    parts = []
    for (monomial, value) in polynomial.items():
        negative = rational and value < 0
        magnitude = -value if negative else value
        monomial_text = format_monomial(monomial, names)
        if not monomial_text:
            text = format_raw(magnitude)
        elif magnitude == 1:
            text = monomial_text
        else:
            text = "{value}*{monomial}".format(
                    value=format_raw(magnitude), monomial=monomial_text)
        if not parts:
            parts.append("-" + text if negative else text)
        else:
            parts.append((" - " if negative else " + ") + text)
    return "".join(parts)



# Copyright © 2026 Liftmap developers <liftmap-devel@example.org>
#
# This is free software: you may copy, modify, and/or distribute this work
# under the terms of the Apache License, version 2.0 as published by the
# Apache Software Foundation.
# No warranty expressed or implied. See the file ‘LICENSE.ASF-2’ for details.



# Local variables:
# coding: utf-8
# mode: python
# End:
# vim: fileencoding=utf-8 filetype=python :
