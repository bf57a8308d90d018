import unittest

from hermite_rays.errors import CfgError, InvalidArgumentError
from hermite_rays.typedefs import Number
from hermite_rays.util import get_config_value, parse_index_range, parse_real_range


class GetConfigValueTest(unittest.TestCase):
    def test_get_config_value(self):
        config = {'beta_cut': 2.0, 'max_terms': 5000, 'strict': True}

        self.assertEqual(2.0, get_config_value(config, 'beta_cut', value_type=Number))
        self.assertEqual(5000, get_config_value(config, 'max_terms', value_type=int))
        self.assertEqual(7, get_config_value(config, 'stop_run', default_value=7))

        with self.assertRaises(CfgError) as e:
            get_config_value(config, 'stop_run', key_path='zeros')

        self.assertEqual('missing configuration key "zeros/stop_run"', str(e.exception))

        with self.assertRaises(CfgError) as e:
            get_config_value(config, 'beta_cut', value_type=int, key_path='region')

        self.assertEqual('value for configuration key "region/beta_cut" is of wrong type: '
                         'expected type int, got type float', str(e.exception))

        # booleans are not numbers here
        with self.assertRaises(CfgError):
            get_config_value(config, 'strict', value_type=Number)

        with self.assertRaises(CfgError):
            get_config_value(['not', 'a', 'mapping'], 'beta_cut')


class ParseRangeTest(unittest.TestCase):
    def test_parse_real_range(self):
        self.assertEqual((-8.0, 8.0, 9), parse_real_range('-8:8:9'))
        self.assertEqual((0.5, 0.5, 1), parse_real_range('0.5:0.5:1'))

        for text in ('1:2', '1:2:3:4', 'a:2:3', '1:2:0', '2:1:5', '1:2:1.5'):
            with self.assertRaises(InvalidArgumentError, msg=text):
                parse_real_range(text)

    def test_parse_index_range(self):
        self.assertEqual((1, 10), parse_index_range('1:10', 1, 20))
        self.assertEqual((7, 7), parse_index_range('7:7', 1, 20))

        for text in ('1', '3:2', '0:4', '1:21', 'x:3'):
            with self.assertRaises(InvalidArgumentError, msg=text):
                parse_index_range(text, 1, 20)


if __name__ == '__main__':
    unittest.main()
