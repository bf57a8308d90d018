import math
import unittest

from hermite_rays.errors import CfgError, DomainError, EXIT_NUMERIC, EXIT_USAGE, HermiteError, \
    InvalidArgumentError, NumericalFailureError, OutputError, raise_for_non_finite, raise_for_non_integer


class ErrorsTest(unittest.TestCase):
    def test_exit_codes(self):
        self.assertEqual(EXIT_USAGE, InvalidArgumentError('bad').exit_code)
        self.assertEqual(EXIT_USAGE, DomainError('outside').exit_code)
        self.assertEqual(EXIT_NUMERIC, NumericalFailureError('diverged').exit_code)
        self.assertEqual(EXIT_NUMERIC, OutputError('disk full').exit_code)
        self.assertEqual(EXIT_NUMERIC, CfgError('broken').exit_code)

    def test_message_and_hint(self):
        e = InvalidArgumentError('n must be even', hint='use --n 20')
        self.assertIsInstance(e, HermiteError)
        self.assertEqual('n must be even', str(e))
        self.assertEqual('use --n 20', e.hint)
        self.assertIsNone(CfgError('broken').hint)

    def test_raise_for_non_finite(self):
        raise_for_non_finite('x', 1.5)
        raise_for_non_finite('x', 3)
        for value in (math.nan, math.inf, -math.inf):
            with self.assertRaises(InvalidArgumentError):
                raise_for_non_finite('x', value)

        with self.assertRaises(InvalidArgumentError) as e:
            raise_for_non_finite('x', 'one')

        self.assertEqual("x must be a real number, got 'one'", str(e.exception))

    def test_raise_for_non_integer(self):
        raise_for_non_integer('n', 0, minimum=0)
        with self.assertRaises(InvalidArgumentError):
            raise_for_non_integer('n', 2.0)
        with self.assertRaises(InvalidArgumentError):
            raise_for_non_integer('n', True)

        with self.assertRaises(InvalidArgumentError) as e:
            raise_for_non_integer('n', 0, minimum=1)

        self.assertEqual('n must be greater than or equal to 1, got 0', str(e.exception))


if __name__ == '__main__':
    unittest.main()
