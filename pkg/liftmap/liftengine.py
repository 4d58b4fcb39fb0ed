# liftmap/liftengine.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.
#
# This is free software, and you are welcome to redistribute it under
# certain conditions; see the end of this file for copyright
# information, grant of license, and disclaimer of warranty.

""" Lifting finite self maps of A = K⟦X₁,…,Xₙ⟧/𝔞 to the ambient ring.

    The pipeline of `lift_map`:

    * choose a strong system of parameters x₁,…,x_d of A among linear
      forms (`strong_sop`);
    * complete it to a linear coordinate system of R in which
      X₁,…,X_d are the parameters and X₁,…,Xₑ generate 𝔪_A;
    * take fᵢ as the representative of φ(Xᵢ) for i ≤ d, and check
      that ⟨f₁,…,f_d⟩ has height d in R;
    * for each later variable, adjust the representative of φ(Xᵢ)
      within its coset modulo 𝔞 until the dimension drops by one
      (`coset_search`);
    * transform back and verify (`verify_lift`).

    Where the classical argument avoids a finite set of primes, this
    module enumerates candidates in a fixed order and accepts the
    first one whose dimension condition is verified exactly.
    """

import itertools
import logging
import random

from .invariants import (
        InvariantError, check_mode_input, embedding_dimension,
        krull_dimension, quotient_k_dimension)
from .polyring import (
        ContextMismatchError, LinearSpan, Polynomial, SingularMatrixError,
        VarContext, VariableMap, identity_matrix,
        linear_coordinates, linear_part, linear_rank_extend,
        linear_substitution, matrix_inverse, matrix_product,
        monomials_of_degree)
from .stdbasis import (
        BasisCache, IdealData, compute_basis, degrevlex, graded_mode,
        is_member, local_mode, modes, order_for_mode)


logger = logging.getLogger(__name__)


class LiftError(Exception):
    """ Base exception class for errors from this module. """


class PresentationError(LiftError, ValueError):
    """ Exception raised when a presentation violates its invariants. """


class IllDefinedMapError(LiftError, ValueError):
    """ Exception raised when a map does not preserve the ideal. """


class NotFiniteError(LiftError, ValueError):
    """ Exception raised when lifting a map that is not finite. """


class SearchExhaustedError(LiftError, RuntimeError):
    """ Exception raised when a candidate search exceeds its budget. """

    def __init__(self, message, step=None, attempts=None):
        super().__init__(message)
        self.step = step
        self.attempts = attempts


class InternalAssertionError(LiftError, AssertionError):
    """ Exception raised when a guaranteed property fails to hold. """



default_seed = 0
default_max_attempts = 10000
default_coeff_bound = 3
default_adjuster_degree_cap = 2
default_elimination_order = 8

random_stream_stride = 1000003


def _step_random(seed, step):
    """ The pseudorandom stream for search step `step`. """
    return random.Random(seed * random_stream_stride + step)


def _nonzero_pool(field, bound):
    return [value for value in field.pool(bound) if value]


class Presentation:
    """ The data of a quotient A = R/𝔞 of R = K⟦X₁,…,Xₙ⟧.

        `ideal`
            The `IdealData` 𝔞, contained in 𝔪.

        `mode`
            `local_mode` for the complete local ring; `graded_mode` for
            a homogeneous 𝔞 treated as a graded ring.

        `dimension`
            The Krull dimension d of A.

        `embedding_dimension`
            The embedding dimension e of A; d ≤ e ≤ n.

        Applying π to a polynomial is taking it as its own
        representative. Computed bases are kept in a `BasisCache`
        private to the presentation.
        """

    def __init__(self, ideal, mode=local_mode):
        """ Set up a new instance.

            :param ideal: The `IdealData` 𝔞.
            :param mode: `local_mode` or `graded_mode`.
            :raises PresentationError: If the mode is unknown, a
                generator has a nonzero constant term, or a generator is
                not homogeneous in graded mode.
            """
        if mode not in modes:
            raise PresentationError("Unknown mode: {mode!r}".format(
                    mode=mode))
        if not ideal.is_in_maximal_ideal():
            raise PresentationError(
                    "The ideal must lie in the maximal ideal: {ideal!r}".format(
                        ideal=ideal))
        try:
            check_mode_input(ideal, mode)
        except InvariantError as exc:
            error = PresentationError(str(exc))
            raise error from exc
        self.ideal = ideal
        self.mode = mode
        self.cache = BasisCache()
        self.dimension = krull_dimension(ideal, mode, self.cache).dimension
        self.embedding_dimension = embedding_dimension(ideal)
        if not (
                0 <= self.dimension <= self.embedding_dimension
                <= self.context.nvars):
            raise InternalAssertionError(
                    "Expected d ≤ e ≤ n, got d={d:d}, e={e:d}, n={n:d}".format(
                        d=self.dimension, e=self.embedding_dimension,
                        n=self.context.nvars))

    def __repr__(self):
        return (
                "Presentation({ideal!r}, mode={mode!r},"
                " d={d:d}, e={e:d})").format(
                    ideal=self.ideal, mode=self.mode,
                    d=self.dimension, e=self.embedding_dimension)

    @property
    def context(self):
        """ The `VarContext` of R. """
        return self.ideal.context

    @property
    def order(self):
        """ The computational ordering of the mode. """
        return order_for_mode(self.context, self.mode)

    def with_ideal(self, ideal):
        """ A presentation in the same mode with another ideal. """
        return Presentation(ideal, self.mode)

    def contains(self, polynomial):
        """ ``True`` iff `polynomial` lies in 𝔞. """
        return is_member(polynomial, self.ideal, self.mode, self.cache)

    def residue(self, polynomial):
        """ Normal form of `polynomial` modulo 𝔞 in the mode's ordering.

            The residue is zero iff `polynomial` lies in 𝔞.
            """
        if self.ideal.is_zero():
            return polynomial
        return compute_basis(
                self.ideal, self.order, self.cache).normal_form(polynomial)

    def representative(self, polynomial):
        """ The canonical representative of π(`polynomial`).

            This is the normal form modulo a Gröbner basis of 𝔞 under
            the global graded reverse lexicographic ordering; it differs
            from `polynomial` by an element of 𝔞, and is homogeneous of
            the same degree when `polynomial` and 𝔞 are homogeneous.
            """
        if self.ideal.is_zero():
            return polynomial
        basis = compute_basis(
                self.ideal, degrevlex(self.context), self.cache)
        return basis.normal_form(polynomial)

    def dimension_with(self, polynomials):
        """ Krull dimension of A/⟨polynomials⟩. """
        ideal = self.ideal.extended(polynomials)
        return krull_dimension(ideal, self.mode, self.cache).dimension

    def ambient_dimension(self, polynomials):
        """ Krull dimension of R/⟨polynomials⟩, ignoring 𝔞. """
        ideal = IdealData(self.context, polynomials)
        return krull_dimension(ideal, self.mode, self.cache).dimension

    def linear_parts(self):
        """ Nonzero linear parts of the generators of 𝔞. """
        parts = [linear_part(generator) for generator in self.ideal.generators]
        return [part for part in parts if part]


class SelfMapOnA:
    """ A local self map φ of A, by representatives of φ(π(Xᵢ)).

        `presentation`
            The `Presentation` of A.

        `map`
            A self `VariableMap` of R whose images represent φ(π(Xᵢ)).

        In graded mode the nonzero images are homogeneous of one
        common degree, `image_degree`.
        """

    def __init__(self, presentation, variable_map):
        """ Set up a new instance.

            :raises IllDefinedMapError: If the map is not a self map of
                the presentation's ring, is not graded in graded mode,
                or does not send 𝔞 into 𝔞.
            """
        if (
                variable_map.context != presentation.context
                or not variable_map.is_self_map()):
            raise IllDefinedMapError(
                    "The map is not a self map of the presented ring")
        self.presentation = presentation
        self.map = variable_map
        self.image_degree = None
        if presentation.mode == graded_mode:
            self.image_degree = self._common_degree()
        failure = self.check_well_defined()
        if failure is not None:
            raise IllDefinedMapError(
                    "The map sends {g} to {image}, outside the ideal".format(
                        g=failure, image=variable_map(failure)))

    def __repr__(self):
        return "SelfMapOnA({map!r})".format(map=self.map)

    def _common_degree(self):
        degrees = set()
        for (name, image) in zip(self.map.context.names, self.map.images):
            if not image:
                continue
            if not image.is_homogeneous():
                raise IllDefinedMapError(
                        "Graded mode needs homogeneous images;"
                        " image of {name} is {image}".format(
                            name=name, image=image))
            degrees.add(image.total_degree())
        if len(degrees) > 1:
            raise IllDefinedMapError(
                    "Graded mode needs images of one degree, got degrees"
                    " {degrees}".format(degrees=sorted(degrees)))
        return degrees.pop() if degrees else None

    @property
    def images(self):
        """ The representatives of φ(π(X₁)),…,φ(π(Xₙ)). """
        return self.map.images

    def check_well_defined(self):
        """ Find a generator of 𝔞 whose image leaves 𝔞.

            :return: The first generator g with φ(g) ∉ 𝔞, or ``None``
                if the map is well defined.
            """
        for generator in self.presentation.ideal.generators:
            if not self.presentation.contains(self.map(generator)):
                return generator
        return None


def is_finite_map(self_map):
    """ Decide whether the self map φ of A is finite.

        :param self_map: A `SelfMapOnA`; well defined by construction.
        :return: ``True`` iff ⟨φ(X₁),…,φ(Xₙ)⟩ + 𝔞 is 𝔪-primary.

        The residue field extension is trivial, so finiteness is
        equivalent to ⟨φ(𝔪_A)⟩ being 𝔪_A-primary.
        """
    dimension = self_map.presentation.dimension_with(self_map.images)
    logger.debug("Image ideal of the map has dimension {dim:d}".format(
            dim=dimension))
    return dimension == 0



class SOPCertificate:
    """ A strong system of parameters of A with its evidence.

        `elements`
            The d linear forms x₁,…,x_d.

        `dimension_trace`
            For each i, the dimension of A/⟨x₁,…,x_{i−1}⟩: the values
            d, d−1, …, 1.

        `final_dimension`
            The dimension of A/⟨x₁,…,x_d⟩, always 0.

        `base_rank`
            Rank of the linear parts of 𝔞.

        `rank_trace`
            For each i, the rank of the linear parts of 𝔞 and
            x₁,…,xᵢ; it grows by one per element, so the xᵢ are
            independent in 𝔪/(𝔪² + 𝔞).

        `attempts`
            Number of candidates examined.
        """

    def __init__(
            self, elements, dimension_trace, final_dimension,
            base_rank, rank_trace, attempts):
        self.elements = tuple(elements)
        self.dimension_trace = tuple(dimension_trace)
        self.final_dimension = final_dimension
        self.base_rank = base_rank
        self.rank_trace = tuple(rank_trace)
        self.attempts = attempts

    def __repr__(self):
        return "SOPCertificate([{elements}], trace={trace!r})".format(
                elements=", ".join(str(element) for element in self.elements),
                trace=list(self.dimension_trace))

    @property
    def start_dimension(self):
        """ The dimension d of A. """
        if self.dimension_trace:
            return self.dimension_trace[0]
        return self.final_dimension


def _sop_candidates(variables, field, coeff_bound, rng):
    """ Generate linear candidates in the fixed enumeration order.

        Single variables come first; then combinations over growing
        supports, with the first coefficient 1 and the others drawn
        from the nonzero pool for increasing coefficient bounds; then
        sparse pseudorandom combinations, without end.
        """
    for variable in variables:
        yield variable
    seen = set()
    for bound in range(1, coeff_bound + 1):
        pool = _nonzero_pool(field, bound)
        for size in range(2, len(variables) + 1):
            for support in itertools.combinations(variables, size):
                for values in itertools.product(pool, repeat=size - 1):
                    key = (support, values)
                    if key in seen:
                        continue
                    seen.add(key)
                    candidate = support[0]
                    for (variable, value) in zip(support[1:], values):
                        candidate = candidate + variable.scale(value)
                    yield candidate
        if field.is_prime_field:
            break
    if not variables:
        return
    pool = _nonzero_pool(field, coeff_bound)
    while True:
        size = rng.randint(1, len(variables))
        support = rng.sample(variables, size)
        candidate = support[0]
        for variable in support[1:]:
            candidate = candidate + variable.scale(rng.choice(pool))
        yield candidate


def strong_sop(
        presentation,
        seed=default_seed, max_attempts=default_max_attempts,
        coeff_bound=default_coeff_bound):
    """ Choose a strong system of parameters of A.

        :param presentation: The `Presentation` of A.
        :param seed: Seed of the pseudorandom candidate phase.
        :param max_attempts: Candidates examined per element before
            giving up.
        :param coeff_bound: Coefficient bound of the enumeration.
        :return: An `SOPCertificate`.
        :raises SearchExhaustedError: If no candidate passes within
            `max_attempts` for some element.

        Candidates are K-linear combinations of the coordinate
        variables completing the linear parts of 𝔞 to a basis of the
        linear forms, which generate 𝔪_A minimally. A candidate xᵢ is
        accepted iff dim A/⟨x₁,…,xᵢ⟩ = d − i and its linear part is
        independent of the linear parts of 𝔞 and x₁,…,x_{i−1}.
        """
    context = presentation.context
    field = context.field
    dimension = presentation.dimension
    linear_parts = presentation.linear_parts()
    (base_rank, variables) = linear_rank_extend(linear_parts, context)
    span = LinearSpan(field, context.nvars)
    for part in linear_parts:
        span.insert(linear_coordinates(part))
    elements = []
    dimension_trace = []
    rank_trace = []
    total_attempts = 0
    for step in range(1, dimension + 1):
        target = dimension - step
        rng = _step_random(seed, step)
        accepted = None
        attempts = 0
        for candidate in _sop_candidates(variables, field, coeff_bound, rng):
            if attempts >= max_attempts:
                break
            attempts += 1
            if span.contains(linear_coordinates(candidate)):
                continue
            if presentation.dimension_with(elements + [candidate]) == target:
                accepted = candidate
                break
        total_attempts += attempts
        if accepted is None:
            raise SearchExhaustedError(
                    "No parameter found for step {step:d}"
                    " within {attempts:d} attempts".format(
                        step=step, attempts=attempts),
                    step=step, attempts=attempts)
        span.insert(linear_coordinates(accepted))
        dimension_trace.append(target + 1)
        rank_trace.append(span.rank)
        elements.append(accepted)
        logger.info(
                "Parameter {step:d}: {element} after {attempts:d}"
                " attempts".format(
                    step=step, element=accepted, attempts=attempts))
    return SOPCertificate(
            elements, dimension_trace, 0, base_rank, rank_trace,
            total_attempts)



class CosetChoice:
    """ Result of a coset search.

        `element`
            The chosen element u + a.

        `adjuster`
            The element a of 𝔞; zero when u itself was accepted.

        `attempts`
            Number of candidates examined.
        """

    def __init__(self, element, adjuster, attempts):
        self.element = element
        self.adjuster = adjuster
        self.attempts = attempts

    def __repr__(self):
        return "CosetChoice({element}, adjuster={adjuster})".format(
                element=self.element, adjuster=self.adjuster)


def _adjuster_candidates(
        presentation, coeff_bound, degree_cap, degree, rng):
    """ Generate elements of 𝔞 in the fixed enumeration order.

        Zero comes first; then single terms c·m·g for monomials m of
        degree ≤ `degree_cap` by increasing degree, generators g of 𝔞,
        and coefficients c of the nonzero pool; then sums of two single
        terms; then pseudorandom sums of up to three. When `degree` is
        given, only terms of that total degree occur.
        """
    context = presentation.context
    generators = presentation.ideal.generators
    pool = _nonzero_pool(context.field, coeff_bound)
    yield context.zero()
    singles = []
    for monomial_degree in range(degree_cap + 1):
        for monomial in monomials_of_degree(context.nvars, monomial_degree):
            for (index, generator) in enumerate(generators):
                if degree is not None and (
                        monomial_degree + generator.total_degree() != degree):
                    continue
                for value in pool:
                    term = generator.mul_term(monomial, value)
                    singles.append(((monomial, index), term))
                    yield term
    for ((key_a, term_a), (key_b, term_b)) in itertools.combinations(
            singles, 2):
        if key_a != key_b:
            yield term_a + term_b
    if not singles:
        return
    while True:
        count = rng.randint(1, min(3, len(singles)))
        total = context.zero()
        for (key, term) in rng.sample(singles, count):
            total = total + term
        yield total


def coset_search(
        u, presentation, fixed, target_dimension,
        seed=default_seed, max_attempts=default_max_attempts,
        coeff_bound=default_coeff_bound,
        adjuster_degree_cap=default_adjuster_degree_cap,
        degree=None, step=0):
    """ Find u + a, with a ∈ 𝔞, cutting R/⟨fixed⟩ down to a dimension.

        :param u: The `Polynomial` u.
        :param presentation: The `Presentation` of A = R/𝔞.
        :param fixed: Sequence of polynomials f₁,…,f_t.
        :param target_dimension: The required dim R/⟨fixed, u + a⟩.
        :param seed: Seed of the pseudorandom phase.
        :param max_attempts: Number of candidates examined before
            giving up.
        :param coeff_bound: Coefficient bound of the enumeration.
        :param adjuster_degree_cap: Largest degree of a monomial
            multiplier in an adjuster.
        :param degree: In graded mode, the total degree every adjuster
            must have; ``None`` for no restriction.
        :param step: Step index, for the pseudorandom stream and for
            error reports.
        :return: A `CosetChoice`.
        :raises InternalAssertionError: If ⟨fixed⟩ + 𝔞 is not
            𝔪-primary, or an accepted adjuster is not in 𝔞.
        :raises SearchExhaustedError: If no candidate passes within
            `max_attempts`.
        """
    fixed = list(fixed)
    if presentation.dimension_with(fixed) != 0:
        raise InternalAssertionError(
                "Coset search at step {step:d} needs an 𝔪-primary"
                " ⟨fixed⟩ + 𝔞".format(step=step))
    graded = presentation.mode == graded_mode
    rng = _step_random(seed, step)
    attempts = 0
    candidates = _adjuster_candidates(
            presentation, coeff_bound, adjuster_degree_cap, degree, rng)
    for adjuster in candidates:
        if attempts >= max_attempts:
            break
        attempts += 1
        element = u + adjuster
        if graded and not element.is_homogeneous():
            continue
        dimension = presentation.ambient_dimension(fixed + [element])
        if dimension != target_dimension:
            continue
        if not presentation.contains(adjuster):
            raise InternalAssertionError(
                    "Adjuster {a} is not in the ideal".format(a=adjuster))
        logger.info(
                "Step {step:d}: adjuster {a} after {attempts:d}"
                " attempts".format(step=step, a=adjuster, attempts=attempts))
        return CosetChoice(element, adjuster, attempts)
    raise SearchExhaustedError(
            "No coset element found for step {step:d}"
            " within {attempts:d} attempts".format(
                step=step, attempts=attempts),
            step=step, attempts=attempts)


def coset_avoid(
        u, presentation, fixed, target_dimension,
        seed=default_seed, max_attempts=default_max_attempts, **options):
    """ The element u + a chosen by `coset_search`. """
    choice = coset_search(
            u, presentation, fixed, target_dimension,
            seed=seed, max_attempts=max_attempts, **options)
    return choice.element



class CheckResult:
    """ Outcome of one verification check.

        `name`
            One of `commutation_check`, `ideal_check`,
            `finiteness_check`.

        `passed`
            ``True`` iff the check holds.

        `witness`
            Text describing a failure, or evidence for a pass; may be
            ``None``.
        """

    def __init__(self, name, passed, witness=None):
        self.name = name
        self.passed = passed
        self.witness = witness

    def __repr__(self):
        return "CheckResult({name!r}, {passed!r}, {witness!r})".format(
                name=self.name, passed=self.passed, witness=self.witness)


commutation_check = 'commutation'
ideal_check = 'ideal'
finiteness_check = 'finiteness'
check_names = (commutation_check, ideal_check, finiteness_check)


class VerificationReport:
    """ The three independent checks of a lift ψ of φ.

        `checks`
            Tuple of `CheckResult`, in the order of `check_names`.

        `residues`
            Residues modulo 𝔞 of rep(φ(π(Xᵢ))) − ψ(Xᵢ), one per
            variable.

        `colength`
            dim_K R/⟨ψ(X₁),…,ψ(Xₙ)⟩, or `infinity`.
        """

    def __init__(self, checks, residues, colength):
        self.checks = tuple(checks)
        self.residues = tuple(residues)
        self.colength = colength

    def __iter__(self):
        return iter(self.checks)

    def __repr__(self):
        return "VerificationReport({checks!r})".format(
                checks=list(self.checks))

    @property
    def passed(self):
        """ ``True`` iff every check passed. """
        return all(check.passed for check in self.checks)

    def check(self, name):
        """ The `CheckResult` named `name`. """
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def failures(self):
        """ List of the failed checks. """
        return [check for check in self.checks if not check.passed]


def verify_lift(self_map, psi):
    """ Check that ψ is a finite lift of φ.

        :param self_map: The `SelfMapOnA` φ.
        :param psi: The self `VariableMap` ψ of R.
        :return: A `VerificationReport` with the checks

            * commutation: ψ(Xᵢ) ≡ rep(φ(π(Xᵢ))) modulo 𝔞 for all i;
            * ideal: ψ(g) ∈ 𝔞 for every generator g of 𝔞;
            * finiteness: ⟨ψ(X₁),…,ψ(Xₙ)⟩ is 𝔪-primary in R.

        :raises ContextMismatchError: If ψ is not a map of the same
            ring.

        Failures are report entries, never exceptions.
        """
    presentation = self_map.presentation
    context = presentation.context
    if psi.context != context or psi.target != context:
        raise ContextMismatchError("The lift is not a self map of R")
    checks = []

    residues = []
    witness = None
    for (name, image, lifted) in zip(
            context.names, self_map.images, psi.images):
        difference = image - lifted
        residue = presentation.residue(difference)
        residues.append(residue)
        if residue and witness is None:
            witness = "{name}: {difference}".format(
                    name=name, difference=difference)
    checks.append(CheckResult(commutation_check, witness is None, witness))

    witness = None
    for generator in presentation.ideal.generators:
        image = psi(generator)
        if not presentation.contains(image):
            witness = "{g} -> {image}".format(g=generator, image=image)
            break
    checks.append(CheckResult(ideal_check, witness is None, witness))

    image_ideal = IdealData(context, psi.images)
    colength = None
    if presentation.mode == graded_mode and not image_ideal.is_homogeneous():
        checks.append(CheckResult(
                finiteness_check, False, "images are not homogeneous"))
    else:
        report = krull_dimension(image_ideal, presentation.mode)
        if report.dimension == 0:
            colength = quotient_k_dimension(image_ideal, presentation.mode)
            checks.append(CheckResult(
                    finiteness_check, True,
                    "colength {colength}".format(colength=colength)))
        else:
            checks.append(CheckResult(
                    finiteness_check, False,
                    "dimension {dim:d}, witness {{{names}}}".format(
                        dim=report.dimension,
                        names=", ".join(report.witness_names()))))
    return VerificationReport(checks, residues, colength)



class StepRecord:
    """ One entry of the per-step trace of a lift.

        `step`
            The index t of fₜ, from 1 to n.

        `dimension`
            dim R/⟨f₁,…,fₜ⟩, equal to n − t.

        `adjuster`
            The element of 𝔞 added to the representative of φ(Xₜ), in
            the original coordinates; zero if none.
        """

    def __init__(self, step, dimension, adjuster):
        self.step = step
        self.dimension = dimension
        self.adjuster = adjuster

    def __eq__(self, other):
        if not isinstance(other, StepRecord):
            return NotImplemented
        return (
                (self.step, self.dimension, self.adjuster)
                == (other.step, other.dimension, other.adjuster))

    def __repr__(self):
        return "StepRecord({step:d}, {dim:d}, {adjuster})".format(
                step=self.step, dim=self.dimension, adjuster=self.adjuster)


class LiftCertificate:
    """ A finite lift ψ of φ with the evidence that re-verifies it.

        `lift`
            The self `VariableMap` ψ of R.

        `coordinate_change`
            The invertible matrix M of the linear coordinate change
            Y = M·X in which the construction ran.

        `inverse`
            The inverse matrix M⁻¹.

        `sop`
            The `SOPCertificate` chosen on A.

        `trace`
            List of `StepRecord`, one per variable.

        `report`
            The `VerificationReport` of ψ.

        `seed`, `attempts`
            The seed used and the total number of candidates examined.
        """

    def __init__(
            self, lift, coordinate_change, inverse, sop, trace, report,
            seed, attempts):
        self.lift = lift
        self.coordinate_change = coordinate_change
        self.inverse = inverse
        self.sop = sop
        self.trace = list(trace)
        self.report = report
        self.seed = seed
        self.attempts = attempts

    def __repr__(self):
        return "LiftCertificate({lift!r})".format(lift=self.lift)

    @property
    def residues(self):
        """ The commutation residues, all zero. """
        return self.report.residues

    @property
    def colength(self):
        """ dim_K R/⟨f₁,…,fₙ⟩. """
        return self.report.colength

    def dimension_trace(self):
        """ List of dim R/⟨f₁,…,fₜ⟩ for t = 1,…,n. """
        return [record.dimension for record in self.trace]


def coordinate_change_matrix(presentation, sop):
    """ The rows of a linear coordinate change adapted to `sop`.

        :return: An invertible n × n matrix of raw values whose rows
            are the linear forms of the parameters x₁,…,x_d; then
            variables completing them and the linear parts of 𝔞, so
            that the first e rows give minimal generators of 𝔪_A; then
            variables completing to a basis of the linear forms.
        """
    context = presentation.context
    parameters = list(sop.elements)
    (rank, minimal_completion) = linear_rank_extend(
            parameters + presentation.linear_parts(), context)
    (rank, completion) = linear_rank_extend(
            parameters + minimal_completion, context)
    rows = parameters + minimal_completion + completion
    return [linear_coordinates(row) for row in rows]


def lift_map(
        self_map,
        seed=default_seed, max_attempts=default_max_attempts,
        coeff_bound=default_coeff_bound,
        adjuster_degree_cap=default_adjuster_degree_cap):
    """ Lift a finite self map φ of A to a finite self map ψ of R.

        :param self_map: The `SelfMapOnA` φ.
        :param seed: Seed for the pseudorandom search phases.
        :param max_attempts: Candidates per search step.
        :param coeff_bound: Coefficient bound of the enumerations.
        :param adjuster_degree_cap: Largest degree of monomial
            multipliers in coset adjusters.
        :return: A `LiftCertificate` whose report passes every check.
        :raises NotFiniteError: If φ is not finite.
        :raises SearchExhaustedError: If a search exceeds its budget.
        :raises InternalAssertionError: If a property guaranteed by
            the construction fails, or the final verification fails.

        The result depends only on the inputs and the options.
        """
    presentation = self_map.presentation
    context = presentation.context
    field = context.field
    n = context.nvars
    if not is_finite_map(self_map):
        raise NotFiniteError("The map is not finite: {map!r}".format(
                map=self_map.map))
    sop = strong_sop(
            presentation, seed=seed, max_attempts=max_attempts,
            coeff_bound=coeff_bound)
    d = len(sop.elements)
    attempts = sop.attempts

    matrix = coordinate_change_matrix(presentation, sop)
    try:
        inverse = matrix_inverse(matrix, field)
    except SingularMatrixError as exc:
        error = InternalAssertionError(
                "Coordinate change is singular: {matrix!r}".format(
                    matrix=matrix))
        raise error from exc
    into_new = linear_substitution(inverse, context)
    out_of_new = linear_substitution(matrix, context)
    new_presentation = presentation.with_ideal(IdealData(context, [
            into_new(generator)
            for generator in presentation.ideal.generators]))
    new_images = []
    for row in matrix:
        image = context.zero()
        for (value, original) in zip(row, self_map.images):
            if value:
                image = image + original.scale(value)
        new_images.append(into_new(image))

    lifted = [
            new_presentation.representative(new_images[index])
            for index in range(d)]
    trace = []
    for step in range(1, d + 1):
        dimension = new_presentation.ambient_dimension(lifted[:step])
        if dimension != n - step:
            raise InternalAssertionError(
                    "Expected dim R/⟨f₁..f_{step:d}⟩ = {expected:d},"
                    " got {dim:d}".format(
                        step=step, expected=n - step, dim=dimension))
        trace.append(StepRecord(step, dimension, context.zero()))
    logger.info("Images of the parameters have height {d:d}".format(d=d))

    degree = self_map.image_degree
    for index in range(d, n):
        step = index + 1
        u = new_presentation.representative(new_images[index])
        choice = coset_search(
                u, new_presentation, lifted, n - step,
                seed=seed, max_attempts=max_attempts,
                coeff_bound=coeff_bound,
                adjuster_degree_cap=adjuster_degree_cap,
                degree=degree, step=step)
        attempts += choice.attempts
        lifted.append(choice.element)
        if degree is None and choice.element and (
                presentation.mode == graded_mode):
            degree = choice.element.total_degree()
        trace.append(StepRecord(
                step, n - step, out_of_new(choice.adjuster)))

    images = []
    for row in inverse:
        image = context.zero()
        for (value, element) in zip(row, lifted):
            if value:
                image = image + element.scale(value)
        images.append(out_of_new(image))
    psi = VariableMap(context, images)
    report = verify_lift(self_map, psi)
    if not report.passed:
        raise InternalAssertionError(
                "The constructed lift fails verification: {failures!r}".format(
                    failures=report.failures()))
    if matrix_product(matrix, inverse, field) != identity_matrix(field, n):
        raise InternalAssertionError("Coordinate change is not inverted")
    logger.info("Lift found after {attempts:d} attempts: {psi!r}".format(
            attempts=attempts, psi=psi))
    return LiftCertificate(
            psi, matrix, inverse, sop, trace, report, seed, attempts)



def _drop_variable(polynomial, index, context):
    """ Move `polynomial`, free of variable `index`, into `context`. """
    return Polynomial(context, {
            monomial[:index] + monomial[index + 1:]: value
            for (monomial, value) in polynomial.coefficients.items()})


def _truncate(polynomial, degree):
    """ The terms of `polynomial` of total degree at most `degree`. """
    return Polynomial(polynomial.context, {
            monomial: value
            for (monomial, value) in polynomial.coefficients.items()
            if sum(monomial) <= degree})


def _solve_for_variable(generator, index, ideal, mode, cache, order_bound):
    """ Solve the generator c·Xⱼ + … = 0 for Xⱼ modulo the ideal.

        :param generator: A `Polynomial` of the ideal whose linear
            part has nonzero coefficient c at Xⱼ, ``j`` = `index`.
        :param ideal: The `IdealData` containing `generator`.
        :param mode: The computation mode of membership tests.
        :param cache: The `BasisCache` of membership tests.
        :param order_bound: The largest truncation degree to try.
        :return: A polynomial F free of Xⱼ with Xⱼ − F in the ideal,
            or ``None`` if no truncation up to `order_bound` is.

        Xⱼ is the fixed point of T = Xⱼ − g/c, as a power series in
        the other variables. Iterating Fₖ = T(Xⱼ ↦ Fₖ₋₁) from F₀ = 0
        and truncating at degree k gives the solution modulo 𝔪^(k+1).
        When 𝔪^N lies in the ideal, the truncation at degree N − 1 is
        already an exact solution.
        """
    context = generator.context
    field = context.field
    variable = context.variable(index)
    value = linear_coordinates(generator)[index]
    fixed_point_map = variable - generator.scale(field.inv(value))
    images = context.variables()
    solution = context.zero()
    for degree in range(1, order_bound + 1):
        images[index] = solution
        solution = _truncate(
                VariableMap(context, images)(fixed_point_map), degree)
        if is_member(variable - solution, ideal, mode, cache):
            return solution
    return None


def _find_elimination(generators, context, mode, cache, order_bound):
    """ Find a variable to eliminate and its solution.

        :return: A pair (index, solution) for the first generator, and
            within it the lowest variable with a nonzero linear
            coefficient, that `_solve_for_variable` can solve for; or
            ``None``.
        """
    ideal = IdealData(context, generators)
    for generator in generators:
        vector = linear_coordinates(generator)
        for (index, value) in enumerate(vector):
            if not value:
                continue
            solution = _solve_for_variable(
                    generator, index, ideal, mode, cache, order_bound)
            if solution is not None:
                return (index, solution)
    return None


def minimal_presentation(
        presentation, elimination_order=default_elimination_order):
    """ Present A with e = embedding dimension variables.

        :param presentation: The `Presentation` of A.
        :param elimination_order: The largest truncation degree tried
            when solving for a variable of a presentation of positive
            dimension.
        :return: A tuple (`reduced`, `forward`, `backward`): the new
            `Presentation` over R′, the `VariableMap` R → R′, and the
            `VariableMap` R′ → R. Forward and backward induce mutually
            inverse isomorphisms of the quotients.

        A generator with a linear term c·Xⱼ is solved for Xⱼ as a
        polynomial F in the other variables with Xⱼ − F in 𝔞; then Xⱼ
        is replaced by F everywhere and dropped. Each substitution
        carries out one step of Gaussian elimination on the linear
        parts of the remaining generators. Eliminations repeat until
        no generator has a linear term.

        When A is Artinian of colength ℓ, 𝔪^ℓ lies in 𝔞, so every
        solution is found by truncation at degree below ℓ and the
        result always has e variables. Otherwise a power series
        solution may have no polynomial truncation in 𝔞 up to
        `elimination_order`; its linear term is left in place, with a
        warning. At least one variable always remains.
        """
    context = presentation.context
    mode = presentation.mode
    target = max(presentation.embedding_dimension, 1)
    order_bound = elimination_order
    if presentation.dimension == 0:
        colength = quotient_k_dimension(
                presentation.ideal, mode, presentation.cache)
        order_bound = max(order_bound, colength)
    cache = BasisCache()
    generators = list(presentation.ideal.generators)
    forward = VariableMap.identity(context)
    backward = VariableMap.identity(context)
    current = context
    while current.nvars > 1:
        found = _find_elimination(
                generators, current, mode, cache, order_bound)
        if found is None:
            break
        (index, solution) = found
        names = current.names[:index] + current.names[index + 1:]
        reduced_context = VarContext(names, current.field)
        images = current.variables()
        images[index] = solution
        step_forward = VariableMap(
                current,
                [
                    _drop_variable(image, index, reduced_context)
                    for image in images],
                target=reduced_context)
        step_backward = VariableMap(
                reduced_context,
                [current.variable(name) for name in names],
                target=current)
        generators = [
                image for image in map(step_forward, generators) if image]
        forward = forward.compose(step_forward)
        backward = step_backward.compose(backward)
        logger.debug("Eliminated {name} = {solution}".format(
                name=current.names[index], solution=solution))
        current = reduced_context
    reduced = Presentation(IdealData(current, generators), mode)
    if current.nvars > target:
        logger.warning(
                "Presentation keeps {n:d} variables for embedding"
                " dimension {e:d}: {ideal!r}".format(
                    n=current.nvars, e=presentation.embedding_dimension,
                    ideal=reduced.ideal))
    return (reduced, forward, backward)


def verify_presentation_maps(original, reduced, forward, backward):
    """ Check that `forward` and `backward` are inverse isomorphisms.

        :param original: The `Presentation` of A = R/𝔞.
        :param reduced: The `Presentation` of A′ = R′/𝔞′.
        :param forward: The `VariableMap` R → R′.
        :param backward: The `VariableMap` R′ → R.
        :return: ``True`` iff both maps are well defined on the
            quotients and each composite is the identity modulo the
            respective ideal.
        """
    if not all(
            reduced.contains(forward(generator))
            for generator in original.ideal.generators):
        return False
    if not all(
            original.contains(backward(generator))
            for generator in reduced.ideal.generators):
        return False
    round_trip = forward.compose(backward)
    if not all(
            original.contains(image - variable)
            for (image, variable) in zip(
                round_trip.images, original.context.variables())):
        return False
    round_trip = backward.compose(forward)
    return all(
            reduced.contains(image - variable)
            for (image, variable) in zip(
                round_trip.images, reduced.context.variables()))



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
