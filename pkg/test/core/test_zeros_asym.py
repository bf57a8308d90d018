import math
import unittest

from hermite_rays.core.hermite_core import hermite_eval_exact, hermite_zeros_exact
from hermite_rays.core.zeros_asym import SERIES_COEFFS, ComparisonRow, ZeroEstimate, ZeroMethod, ZerosConfig, \
    center_series_gate, edge_series_gate, exact_zero, kappa, kapteyn_sum, newton_polish, solve_tau, tau_kapteyn, \
    tau_phase, tau_series_center, tau_series_edge, xi, zero_from_kapteyn, zero_from_tau, zero_series_center, \
    zero_series_edge, zeros_table
from hermite_rays.errors import InvalidArgumentError, NumericalFailureError

SQRT40 = math.sqrt(40.0)


class TauPhaseTest(unittest.TestCase):
    def test_end_points(self):
        for n in (1, 20, 333):
            self.assertAlmostEqual(math.pi / 4, tau_phase(n, math.pi / 2), delta=1e-12)
            self.assertAlmostEqual(-n * math.pi - math.pi / 4, tau_phase(n, -math.pi / 2), delta=1e-10)

    def test_monotone(self):
        self.assertGreater(tau_phase(20, 0.2), tau_phase(20, 0.1))

    def test_domain(self):
        with self.assertRaises(InvalidArgumentError):
            tau_phase(20, 2.0)


class SolveTauTest(unittest.TestCase):
    def test_table_values(self):
        self.assertAlmostEqual(0.24536, SQRT40 * math.sin(solve_tau(20, 10, 1e-12)), delta=1e-5)
        self.assertAlmostEqual(5.3938, SQRT40 * math.sin(solve_tau(20, 1, 1e-12)), delta=1e-4)

    def test_solves_phase_equation(self):
        for n in (1, 7, 20, 1000):
            for k in sorted({1, (n + 1) // 2, n}):
                tau = solve_tau(n, k)
                self.assertLess(abs(tau), math.pi / 2)
                self.assertAlmostEqual((1 - 2 * k) * math.pi / 2, tau_phase(n, tau), delta=1e-9 * n)

    def test_symmetry(self):
        n, abs_tol = 20, 1e-12
        for k in range(1, 11):
            self.assertAlmostEqual(-solve_tau(n, n + 1 - k, abs_tol), solve_tau(n, k, abs_tol), delta=2 * abs_tol)

    def test_zero_from_tau(self):
        first = zero_from_tau(20, 1)
        last = zero_from_tau(20, 20)
        self.assertEqual(ZeroMethod.TAU_BISECT, first.method)
        self.assertEqual(1, first.k)
        self.assertAlmostEqual(-first.value, last.value, delta=2e-9)
        self.assertIsNone(first.exact_ref)

    def test_invalid_arguments(self):
        with self.assertRaises(InvalidArgumentError):
            solve_tau(20, 0)
        with self.assertRaises(InvalidArgumentError):
            solve_tau(20, 21)
        with self.assertRaises(InvalidArgumentError):
            solve_tau(20, 1, 0.0)

    def test_bracketing(self):
        for n in (1, 2, 3, 5, 10, 20, 50, 101, 200):
            zeros = hermite_zeros_exact(n)
            for k in range(1, n + 1):
                estimate = zero_from_tau(n, k).value
                delta = max(3.0 * abs(estimate - zeros[n - k]), 1e-9)
                left = hermite_eval_exact(n, estimate - delta)
                right = hermite_eval_exact(n, estimate + delta)
                self.assertEqual(-left.sign, right.sign, msg=f'n={n}, k={k}')


class KapteynTest(unittest.TestCase):
    def test_agrees_with_bisection(self):
        for k in range(1, 21):
            result = kapteyn_sum(20, k, 1e-10, 5000)
            self.assertTrue(result.converged)
            self.assertLessEqual(result.terms_used, 5000)
            self.assertLessEqual(abs(result.tau - solve_tau(20, k, 1e-12)), 1e-6, msg=f'k={k}')
        self.assertEqual(kapteyn_sum(20, 5, 1e-10, 5000).tau, tau_kapteyn(20, 5, 1e-10, 5000))

    def test_zero_from_kapteyn(self):
        estimate = zero_from_kapteyn(20, 10)
        self.assertEqual(ZeroMethod.KAPTEYN, estimate.method)
        self.assertAlmostEqual(zero_from_tau(20, 10).value, estimate.value, delta=1e-5)

    def test_cap_is_reported(self):
        with self.assertLogs('hermite_rays.core.zeros_asym', level='WARNING'):
            result = kapteyn_sum(20, 1, 1e-10, 50)
        self.assertFalse(result.converged)
        self.assertEqual(50, result.terms_used)


class EdgeSeriesTest(unittest.TestCase):
    def test_coefficients(self):
        self.assertEqual(10, len(SERIES_COEFFS.edge_a))
        self.assertAlmostEqual(9.0 * math.pi, kappa(1), delta=1e-12)
        c = kappa(3)
        self.assertAlmostEqual(c ** (1.0 / 3.0) / 2.0, SERIES_COEFFS.edge_a[0](c), places=14)

    def test_leading_term(self):
        n = 10 ** 4
        self.assertAlmostEqual((9.0 * math.pi) ** (1.0 / 3.0) / 2.0 * n ** (-1.0 / 3.0),
                               math.pi / 2 - tau_series_edge(n, 1, 1), delta=1e-14)

    def test_improvement(self):
        n, k = 10 ** 4, 1
        tau = solve_tau(n, k, 1e-15)
        errors = [abs(tau_series_edge(n, k, m) - tau) for m in range(1, 7)]
        for m in range(5):
            self.assertLessEqual(errors[m + 1], errors[m] + 1e-15, msg=f'terms={m + 2}')
        self.assertLess(errors[-1], 1e-8)

    def test_zero_values(self):
        first = zero_series_edge(20, 1)
        self.assertEqual(ZeroMethod.EDGE_SERIES, first.method)
        self.assertAlmostEqual(5.3937, first.value, delta=1e-4)
        self.assertAlmostEqual(2.7912, zero_series_edge(20, 5).value, delta=1e-4)
        self.assertAlmostEqual(2.2592, zero_series_edge(20, 6).value, delta=2e-4)

    def test_four_term_prefix(self):
        n, k = 20, 2
        c = kappa(k)
        expected = math.sqrt(2.0) * (n ** 0.5 - c ** (2.0 / 3.0) / 8.0 * n ** (-1.0 / 6.0) + 0.25 * n ** -0.5
                                     - (c ** 2 + 80.0) / (640.0 * c ** (2.0 / 3.0)) * n ** (-5.0 / 6.0))
        self.assertAlmostEqual(expected, zero_series_edge(n, k, 4).value, delta=1e-13)

    def test_more_terms_approach_exact(self):
        n = 10 ** 4
        exact = hermite_zeros_exact(2000)[-1]
        self.assertLess(abs(zero_series_edge(2000, 1).value - exact), abs(zero_series_edge(2000, 1, 2).value - exact))
        self.assertGreater(zero_series_edge(n, 1).value, zero_series_edge(n, 2).value)

    def test_terms_bounds(self):
        with self.assertRaises(InvalidArgumentError):
            tau_series_edge(20, 1, 11)
        with self.assertRaises(InvalidArgumentError):
            zero_series_edge(20, 1, 10)
        with self.assertRaises(InvalidArgumentError):
            zero_series_edge(20, 1, 0)


class CenterSeriesTest(unittest.TestCase):
    def test_coefficients(self):
        self.assertEqual(6, len(SERIES_COEFFS.center_b))
        self.assertEqual(0.7, SERIES_COEFFS.center_b[0](0.7))

    def test_leading_term(self):
        self.assertAlmostEqual(xi(20, 1) / 20, tau_series_center(20, 1, 1), places=15)
        self.assertAlmostEqual(math.pi / 4, xi(20, 1), places=15)

    def test_against_bisection(self):
        self.assertAlmostEqual(solve_tau(20, 10, 1e-14), tau_series_center(20, 1), delta=1e-6)

    def test_improvement(self):
        n, j = 10 ** 4, 1
        tau = solve_tau(n, n // 2 + 1 - j, 1e-15)
        errors = [abs(tau_series_center(n, j, m) - tau) for m in range(1, 7)]
        for m in range(5):
            self.assertLessEqual(errors[m + 1], errors[m] + 1e-15, msg=f'terms={m + 2}')

    def test_odd_degree_center(self):
        self.assertEqual(0.0, xi(21, 0))
        self.assertEqual(0.0, tau_series_center(21, 0))
        estimate = zero_series_center(21, 0)
        self.assertEqual(11, estimate.k)
        self.assertEqual(0.0, estimate.value)

    def test_zero_values(self):
        first = zero_series_center(20, 1)
        self.assertEqual(10, first.k)
        self.assertEqual(ZeroMethod.CENTER_SERIES, first.method)
        self.assertAlmostEqual(0.24536, first.value, delta=1e-5)
        sixth = zero_series_center(20, 6)
        self.assertEqual(5, sixth.k)
        self.assertAlmostEqual(2.7779, sixth.value, delta=1e-4)

    def test_bounds(self):
        with self.assertRaises(InvalidArgumentError):
            zero_series_center(20, 1, 5)
        with self.assertRaises(InvalidArgumentError):
            tau_series_center(20, 1, 7)
        with self.assertRaises(InvalidArgumentError):
            zero_series_center(20, -1)
        with self.assertRaises(InvalidArgumentError):
            zero_series_center(20, 11)


class NewtonPolishTest(unittest.TestCase):
    def test_examples(self):
        exact = hermite_zeros_exact(20)
        polished = newton_polish(zero_series_edge(20, 1))
        self.assertEqual(ZeroMethod.NEWTON_POLISHED, polished.method)
        self.assertAlmostEqual(exact[-1], polished.value, delta=1e-10)
        self.assertAlmostEqual(5.38748, polished.value, delta=1e-5)

        polished = newton_polish(zero_from_tau(20, 10))
        self.assertAlmostEqual(exact[10], polished.value, delta=1e-10)
        self.assertAlmostEqual(0.245341, polished.value, delta=1e-6)

    def test_idempotent(self):
        abs_tol = 1e-12
        exact = exact_zero(20, 3)
        polished = newton_polish(exact, abs_tol=abs_tol)
        self.assertLess(abs(polished.value - exact.value), abs_tol)
        self.assertEqual(exact.value, polished.exact_ref)

    def test_all_zeros(self):
        for n in (20, 100, 500):
            zeros = hermite_zeros_exact(n)
            for k in range(1, n + 1):
                polished = newton_polish(zero_from_tau(n, k))
                self.assertLessEqual(abs(polished.value - zeros[n - k]), 1e-10, msg=f'n={n}, k={k}')

    def test_stops_at_round_off(self):
        zeros = hermite_zeros_exact(500)
        for k in (2, 3, 4, 5, 9):
            polished = newton_polish(zero_from_tau(500, k))
            self.assertLessEqual(abs(polished.value - zeros[500 - k]), 1e-10, msg=f'k={k}')
        polished = newton_polish(exact_zero(500, 2), abs_tol=1e-14)
        self.assertLessEqual(abs(polished.value - zeros[498]), 1e-10)

    def test_failures(self):
        with self.assertRaises(NumericalFailureError):
            newton_polish(ZeroEstimate(2, 1, ZeroMethod.TAU_BISECT, 0.01))
        with self.assertRaises(NumericalFailureError):
            newton_polish(ZeroEstimate(20, 1, ZeroMethod.TAU_BISECT, 3.0), max_iters=1)


class ZeroEstimateTest(unittest.TestCase):
    def test_invariants(self):
        with self.assertRaises(InvalidArgumentError):
            ZeroEstimate(5, 6, ZeroMethod.TAU_BISECT, 0.0)
        with self.assertRaises(NumericalFailureError):
            ZeroEstimate(5, 1, ZeroMethod.EDGE_SERIES, 4.0)
        estimate = ZeroEstimate(5, 1, ZeroMethod.TAU_BISECT, 2.0).with_exact(2.02)
        self.assertAlmostEqual(0.02, estimate.abs_err, places=14)

    def test_exact_zero(self):
        estimate = exact_zero(20, 1)
        self.assertEqual(ZeroMethod.EXACT_ORACLE, estimate.method)
        self.assertAlmostEqual(5.3875, estimate.value, delta=5e-5)
        self.assertEqual(0.0, estimate.abs_err)

    def test_config(self):
        cfg = ZerosConfig.default()
        self.assertEqual(5000, cfg.max_terms)
        self.assertEqual(10, cfg.stop_run)
        self.assertEqual(1e-10, cfg.term_tol)
        with self.assertRaises(InvalidArgumentError):
            ZerosConfig(max_terms=0)
        with self.assertRaises(InvalidArgumentError):
            ZerosConfig(term_tol=-1.0)


class ZerosTableTest(unittest.TestCase):
    def test_layout(self):
        rows = zeros_table(20)
        self.assertEqual(10, len(rows))
        self.assertIsInstance(rows[0], ComparisonRow)
        self.assertEqual(list(range(10, 0, -1)), [row.k for row in rows])
        for a, b in zip(rows, rows[1:]):
            self.assertLess(a.exact, b.exact)
        self.assertEqual(6, center_series_gate(20))
        self.assertEqual(6, edge_series_gate(20))
        self.assertEqual([True] * 6 + [False] * 4, [row.center_series is not None for row in rows])
        self.assertEqual([False] * 4 + [True] * 6, [row.edge_series is not None for row in rows])
        self.assertEqual(2, len(zeros_table(4)))

    def test_error_pattern(self):
        rows = zeros_table(20)
        errors = [abs(row.tau_based - row.exact) for row in rows]
        self.assertEqual(len(rows) - 1, errors.index(max(errors)))

    def test_odd_degree_is_rejected(self):
        with self.assertRaises(InvalidArgumentError):
            zeros_table(21)
        with self.assertRaises(InvalidArgumentError):
            zeros_table(0)


if __name__ == '__main__':
    unittest.main()
