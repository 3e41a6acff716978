# cmd/verify.py
"""
Seeded property suites run by `spinorlab verify`.

Each suite returns one record per check with the worst measured value and
the threshold it is held to. A suite passes when every check does; the
same seed and sample count always produce the same records.
"""
import numpy as np

from ..algebra.clifford import ONE
from ..algebra.gamma import CHIRAL, REPRESENTATIONS, STANDARD
from ..algebra.quaternion import Quaternion
from ..lib.config import SUITES
from ..lib.errors import EXIT_INCONSISTENT, ClassInconsistencyError, DegenerateProbeError
from ..spinors.bilinears import (
    aggregate,
    aggregate_matrix,
    bilinears,
    fierz_residuals,
    generalized_fierz_residuals,
    is_boomerang,
    reconstruct,
)
from ..spinors.classifier import classify, verify_class_relations
from ..spinors.elko import (
    CONJUGACIES,
    SELF,
    WeylC2,
    charge_conjugation,
    charge_eigenvalue,
    dirac_from_left,
    elko_basis,
    elko_rest,
    elko_rest_closed_form,
)
from ..spinors.flag_dipole import (
    DirectionElement,
    boomerang_residuals,
    class_limit,
    doran_h,
    extract_frame,
    frame_spinor,
    operator_spinor_projection,
    sigma_idempotency_residual,
    sigma_projector,
)
from ..spinors.hopf import (
    component_fiber_action,
    hopf_from_components,
    hopf_map,
    hopf_via_quaternions,
    instanton_obstruction,
)
from ..spinors.mapping import elko_map_conditions, mappability
from ..spinors.representations import c4_to_even, c4_to_quaternion_pair, even_to_c4, quaternion_pair_to_c4
from ..spinors.samples import FAMILIES, GENERATORS, class_witness, random_direction, random_elko, random_even
from ..spinors.spinor import SpinorC4
from .base import SpinorlabBase

PROBES_PER_SPINOR = 10
RECONSTRUCTION_SPINORS = 100
FIBER_ACTIONS = 100
ELKO_BOOSTS = 20
FLAG_DIPOLE_SAMPLES = 50
LIMIT_FRAMES = 10


def _check(suite, name, worst, threshold, samples):
    worst = float(worst)
    return {
        'suite': suite,
        'check': name,
        'samples': int(samples),
        'worst': worst,
        'threshold': float(threshold),
        'passed': bool(worst <= threshold),
    }


def _mixed_spinor(rng, i):
    family = FAMILIES[i % len(FAMILIES)]
    psi = GENERATORS[family](rng)
    return psi.to_rep(REPRESENTATIONS[(i // len(FAMILIES)) % len(REPRESENTATIONS)])


def _unit(psi):
    return psi.scaled(1.0 / np.sqrt(psi.norm2()))


def _degenerate_probe(rng, psi):
    """A probe xi with psibar xi = 0."""
    xi = rng.normal(size=4) + 1j * rng.normal(size=4)
    v = psi.bar().conj()
    return SpinorC4(xi - v * np.vdot(v, xi) / np.vdot(v, v), psi.rep)


class SuiteRunner(SpinorlabBase):
    table_title = 'verification'
    table_columns = ('suite', 'check', 'samples', 'worst', 'threshold', 'passed')

    #
    # fierz
    #

    def fierz(self, n, rng):
        tol = self.tolerance
        fierz_worst = generalized_worst = matrix_worst = 0.0
        inconsistent = not_boomerang = label_changes = 0
        reconstruction_worst = 0.0
        probes_rejected = probes_missed = 0

        for i in range(n):
            psi = _mixed_spinor(rng, i)
            b = bilinears(psi, tol)
            Z = aggregate(b)
            matrix = Z.matrix(psi.rep)
            fierz_worst = max(fierz_worst, max(fierz_residuals(b)) / b.scale ** 2)
            generalized = generalized_fierz_residuals(Z, b, psi.rep)
            generalized_worst = max(generalized_worst, max(generalized) / np.linalg.norm(matrix) ** 2)
            matrix_worst = max(matrix_worst,
                               np.linalg.norm(matrix - aggregate_matrix(psi)) / np.linalg.norm(matrix))
            not_boomerang += not is_boomerang(Z, tol, psi.rep)
            try:
                label = classify(b, tol).label
            except ClassInconsistencyError:
                inconsistent += 1
                continue

            factor = (0.1 + rng.random() * 10.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            if i < 200 and classify(bilinears(psi.scaled(factor), tol), tol).label != label:
                label_changes += 1

            if i < RECONSTRUCTION_SPINORS:
                for _ in range(PROBES_PER_SPINOR):
                    probe = SpinorC4.random(rng, psi.rep)
                    result = reconstruct(Z, probe, tol, reference=psi)
                    error = np.linalg.norm(result.spinor.components - psi.components) / np.sqrt(psi.norm2())
                    reconstruction_worst = max(reconstruction_worst, error)
                try:
                    reconstruct(Z, _degenerate_probe(rng, psi), tol)
                    probes_missed += 1
                except DegenerateProbeError:
                    probes_rejected += 1

        checked = min(n, RECONSTRUCTION_SPINORS)
        self.logger.debug(f"(verify.fierz) rejected {probes_rejected} degenerate probes")
        return [
            _check('fierz', 'fierz_identities', fierz_worst, 1e-10, n),
            _check('fierz', 'generalized_fierz', generalized_worst, 1e-9, n),
            _check('fierz', 'aggregate_matrix', matrix_worst, 1e-12, n),
            _check('fierz', 'boomerang_failures', not_boomerang, 0, n),
            _check('fierz', 'class_inconsistencies', inconsistent, 0, n),
            _check('fierz', 'label_not_invariant', label_changes, 0, min(n, 200)),
            _check('fierz', 'reconstruction', reconstruction_worst, 1e-8, checked * PROBES_PER_SPINOR),
            _check('fierz', 'degenerate_probe_accepted', probes_missed, 0, checked),
        ]

    #
    # hopf
    #

    def hopf(self, n, rng):
        tol = self.tolerance
        sphere_worst = dictionary_worst = fiber_worst = component_fiber_worst = 0.0
        pair_round_trip = even_round_trip = rep_round_trip = 0.0
        current_ratio = np.inf

        for i in range(n):
            psi = _unit(SpinorC4.random(rng, STANDARD))
            via_quaternions = hopf_via_quaternions(psi, tol)
            from_components = hopf_from_components(psi)
            sphere_worst = max(sphere_worst, abs(via_quaternions.norm() - 1.0), abs(from_components.norm() - 1.0))
            dictionary_worst = max(dictionary_worst,
                                   np.max(np.abs(via_quaternions.as_array() - from_components.as_array())))

            pair = c4_to_quaternion_pair(psi)
            pair_round_trip = max(pair_round_trip,
                                  np.max(np.abs(quaternion_pair_to_c4(pair).components - psi.components)))
            even_round_trip = max(even_round_trip, np.max(np.abs(even_to_c4(c4_to_even(psi)).components
                                                                 - psi.components)))
            chiral = psi.to_rep(CHIRAL).to_rep(STANDARD)
            rep_round_trip = max(rep_round_trip, np.max(np.abs(chiral.components - psi.components)))

            if i < FIBER_ACTIONS:
                point = hopf_map(pair, tol).as_array()
                moved = hopf_map(pair.right_multiply(Quaternion.random_unit(rng)), tol).as_array()
                fiber_worst = max(fiber_worst, np.max(np.abs(moved - point)))

                a, b = (rng.normal(size=2) + 1j * rng.normal(size=2))
                scale = np.sqrt(abs(a) ** 2 + abs(b) ** 2)
                acted = hopf_from_components(component_fiber_action(psi, a / scale, b / scale)).as_array()
                component_fiber_worst = max(component_fiber_worst,
                                            np.max(np.abs(acted - from_components.as_array())))

            mixed = _mixed_spinor(rng, i)
            current_ratio = min(current_ratio, instanton_obstruction(mixed, tol).current_norm / mixed.norm2())

        on_sphere = sum(instanton_obstruction(random_elko(rng), tol).on_s7 for _ in range(n))
        actions = min(n, FIBER_ACTIONS)
        return [
            _check('hopf', 'unit_sphere', sphere_worst, 1e-10, n),
            _check('hopf', 'component_dictionary', dictionary_worst, 1e-10, n),
            _check('hopf', 'quaternion_fiber_invariance', fiber_worst, 1e-10, actions),
            _check('hopf', 'component_fiber_invariance', component_fiber_worst, 1e-10, actions),
            _check('hopf', 'quaternion_round_trip', pair_round_trip, 1e-13, n),
            _check('hopf', 'even_round_trip', even_round_trip, 1e-13, n),
            _check('hopf', 'representation_round_trip', rep_round_trip, 1e-13, n),
            # |(J0..J3)| >= J0 = |psi|^2 for every spinor
            _check('hopf', 'current_lower_bound', 1.0 - current_ratio, 1e-12, n),
            _check('hopf', 'elko_on_s7', on_sphere, 0, n),
        ]

    #
    # projectors
    #

    def projectors(self, n, rng):
        tol = self.tolerance
        elko_worst = 0.0
        elko_wrong_class = charge_failures = 0
        boosts = [np.zeros(3)] + [rng.normal(size=3) * rng.uniform(0.1, 5.0) for _ in range(min(n, ELKO_BOOSTS))]
        for p in boosts:
            for (_, conjugacy), lam in elko_basis(p, 1.0 + rng.random()).items():
                b = bilinears(lam.spinor, tol)
                elko_wrong_class += classify(b, tol).label != 5
                elko_worst = max(elko_worst, abs(b.sigma) / b.J[0], abs(b.omega) / b.J[0],
                                 np.linalg.norm(b.K) / b.J[0])
                expected = 1 if conjugacy == SELF else -1
                charge_failures += charge_eigenvalue(lam.spinor, tol) != expected

        current_gap = spin_gap = 0.0
        closed_form_samples = min(n, 100)
        for _ in range(closed_form_samples):
            phi = WeylC2(rng.normal(size=2) + 1j * rng.normal(size=2))
            scale = np.linalg.norm(phi.components) ** 2
            for conjugacy in CONJUGACIES:
                b = bilinears(elko_rest(phi, conjugacy).spinor)
                J, S = elko_rest_closed_form(phi, conjugacy)
                current_gap = max(current_gap, np.max(np.abs(b.J - J)) / scale)
                spin_gap = max(spin_gap, np.max(np.abs(b.S - S)) / scale)

        involution_worst = 0.0
        for _ in range(min(n, 100)):
            psi = SpinorC4.random(rng, CHIRAL)
            twice = charge_conjugation(charge_conjugation(psi))
            involution_worst = max(involution_worst, np.max(np.abs(twice.components - psi.components)))

        witness_failures = sum(
            classify(bilinears(class_witness(label, rep), tol), tol).label != label
            for label in range(1, 7) for rep in REPRESENTATIONS
        )

        doran_worst = 0.0
        flag_dipole_failures = 0
        frames = []
        for i in range(min(n, FLAG_DIPOLE_SAMPLES)):
            u = DirectionElement.spatial(random_direction(rng))
            Psi = ONE if i == 0 else random_even(rng)
            psi = operator_spinor_projection(Psi, u)
            b = bilinears(psi, tol)
            flag_dipole_failures += classify(b, tol).label != 4
            doran_worst = max(doran_worst, np.linalg.norm(b.K - doran_h(u) * b.J) / np.linalg.norm(b.J))
            frames.append((psi, extract_frame(b)))

        square_worst = annihilator_worst = hs_worst = frame_worst = 0.0
        sum_worst = idempotency_worst = 0.0
        for psi, frame in frames:
            residuals = boomerang_residuals(frame)
            square_worst = max(square_worst, residuals.square)
            annihilator_worst = max(annihilator_worst, residuals.annihilator)
            hs_worst = max(hs_worst, residuals.hs)
            rebuilt = bilinears(frame_spinor(frame, tol))
            frame_worst = max(frame_worst, np.linalg.norm(rebuilt.J - frame.J) / frame.J[0])
            total = sigma_projector(psi, frame.s, frame.h, '+') + sigma_projector(psi, frame.s, frame.h, '-')
            sum_worst = max(sum_worst, np.max(np.abs(total.components - psi.components)))
            idempotency_worst = max(idempotency_worst, sigma_idempotency_residual(frame.s, frame.h))

        h_limit_failures = s_limit_failures = 0
        for _, frame in frames[:LIMIT_FRAMES]:
            h_limit_failures += class_limit(frame, 'h', tol=tol)[-1].lounesto.label != 5
            s_limit_failures += class_limit(frame, 's', tol=tol)[-1].lounesto.label != 6

        relation_worst = 0.0
        for _ in range(min(n, 100)):
            phi = WeylC2(rng.normal(size=2) + 1j * rng.normal(size=2))
            for psi in (dirac_from_left(phi, rng.normal(size=3), 0.5 + rng.random()), SpinorC4.random(rng)):
                b = bilinears(psi, tol)
                relations = verify_class_relations(b, classify(b, tol))
                relation_worst = max(relation_worst, max(relations.residuals.values()) / b.scale)

        return [
            _check('projectors', 'elko_class', elko_wrong_class, 0, len(boosts) * 4),
            _check('projectors', 'elko_vanishing_bilinears', elko_worst, tol, len(boosts) * 4),
            _check('projectors', 'elko_current_closed_form', current_gap, 1e-12, 2 * closed_form_samples),
            _check('projectors', 'elko_spin_closed_form', spin_gap, 1e-12, 2 * closed_form_samples),
            _check('projectors', 'elko_charge_eigenvalue', charge_failures, 0, len(boosts) * 4),
            _check('projectors', 'charge_conjugation_involution', involution_worst, 1e-12, min(n, 100)),
            _check('projectors', 'class_witnesses', witness_failures, 0, 12),
            _check('projectors', 'flag_dipole_class', flag_dipole_failures, 0, len(frames)),
            _check('projectors', 'doran_h', doran_worst, 1e-9, len(frames)),
            _check('projectors', 'boomerang_square', square_worst, 1e-11, len(frames)),
            _check('projectors', 'boomerang_annihilator', annihilator_worst, 1e-9, len(frames)),
            _check('projectors', 'h_s_constraint', hs_worst, 1e-9, len(frames)),
            _check('projectors', 'frame_reconstruction', frame_worst, 1e-8, len(frames)),
            _check('projectors', 'sigma_projector_sum', sum_worst, 1e-12, len(frames)),
            _check('projectors', 'sigma_projector_idempotency', idempotency_worst, 1e-9, len(frames)),
            _check('projectors', 'flagpole_limit', h_limit_failures, 0, min(len(frames), LIMIT_FRAMES)),
            _check('projectors', 'weyl_limit', s_limit_failures, 0, min(len(frames), LIMIT_FRAMES)),
            _check('projectors', 'class_relations', relation_worst, 1e-9, 2 * min(n, 100)),
        ]

    #
    # mapping
    #

    def mapping(self, n, rng):
        tol = self.tolerance
        gap_worst = 0.0
        passed = {'common': 0, 'class2': 0, 'class3': 0, 'own_class': 0}
        for i in range(n):
            psi = SpinorC4.random(rng, REPRESENTATIONS[i % len(REPRESENTATIONS)])
            report = elko_map_conditions(psi)
            gap_worst = max(gap_worst, report.component_gap() / psi.norm2())
            threshold = tol * max(1.0, psi.norm2())
            common = all(abs(value) <= threshold for value in report.common)
            passed['common'] += common
            passed['class2'] += common and abs(report.class2) <= threshold
            passed['class3'] += common and abs(report.class3) <= threshold
            passed['own_class'] += mappability(psi, tol).mappable

        rates = {name: count / n for name, count in passed.items()}
        self.logger.info("📈 mapping pass rates: " + ', '.join(f"{k}={v:.4f}" for k, v in rates.items()))

        family_failures = 0
        for _ in range(min(n, 100)):
            phase = (0.1 + rng.random()) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            for components, label in (([1, 0, 0, 0], 2), ([1, 0, 1j, 0], 3)):
                psi = SpinorC4(phase * np.array(components), STANDARD)
                verdict = mappability(psi, tol)
                family_failures += not (verdict.actual_class == label and verdict.mappable)

        records = [_check('mapping', 'component_forms', gap_worst, 1e-12, n)]
        records += [_check('mapping', f"pass_rate_{name}", rate, 0.01, n) for name, rate in rates.items()]
        records.append(_check('mapping', 'constructed_family', family_failures, 0, 2 * min(n, 100)))
        return records

    def run(self, suite, samples=None, output=None, as_table=False):
        suites = SUITES if suite == 'all' else (suite,)
        records = []
        for name in suites:
            n = samples or self.settings.samples_for(name)
            if n < 1:
                raise ValueError(f"--samples must be at least 1, got {n}")
            self.logger.info(f"🧮 running {name} suite with {n} samples (seed {self.settings.seed})")
            suite_records = getattr(self, name)(n, self.rng())
            failed = [record['check'] for record in suite_records if not record['passed']]
            if failed:
                self.logger.error(f"❌ {name}: failed {', '.join(failed)}")
            else:
                self.logger.info(f"✅ {name}: all {len(suite_records)} checks passed")
            records += suite_records

        failures = sum(not record['passed'] for record in records)
        if failures:
            self.exit_code = EXIT_INCONSISTENT
        footer = f"{len(records) - failures}/{len(records)} checks passed (seed {self.settings.seed})"
        self.emit(records, output, as_table, footer=footer)
        return records
