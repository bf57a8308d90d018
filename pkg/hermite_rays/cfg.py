import logging
import os
import threading
from typing import Optional

import yaml
from jsonschema import validate
from jsonschema.exceptions import ValidationError, SchemaError

from hermite_rays.errors import CfgError
from hermite_rays.typedefs import JsonObject

_LOG = logging.getLogger(__name__)

RESOURCES_DIR = os.path.join(os.path.dirname(__file__), 'resources')
DEFAULTS_FILE = 'defaults.yaml'
DEFAULTS_SCHEMA_FILE = 'defaults-schema.yaml'


class Cfg:
    """
    Packaged numeric defaults, loaded once and validated against their schema.
    """
    _config_lock = threading.Lock()
    _defaults_cfg: Optional[JsonObject] = None

    @classmethod
    def get_section(cls, name: str) -> JsonObject:
        cls.load_config()
        try:
            return dict(cls._defaults_cfg[name])
        except (TypeError, KeyError):
            raise CfgError(f'Unknown configuration section {name}')

    @classmethod
    def load_config(cls, cfg_file: Optional[str] = None):
        if cls._defaults_cfg is None:
            with cls._config_lock:
                if cls._defaults_cfg is None:
                    cls._defaults_cfg = cls._load_defaults(cfg_file)

    @classmethod
    def reset(cls):
        with cls._config_lock:
            cls._defaults_cfg = None

    @classmethod
    def _load_defaults(cls, cfg_file: Optional[str]) -> JsonObject:
        cfg_file = cfg_file or os.path.join(RESOURCES_DIR, DEFAULTS_FILE)
        defaults = cls._load_yaml(cfg_file, 'defaults configuration')
        schema = cls._load_yaml(os.path.join(RESOURCES_DIR, DEFAULTS_SCHEMA_FILE), 'defaults schema')
        cls._validate(js=defaults, schema=schema)
        _LOG.debug(f'loaded defaults from {cfg_file}')
        return defaults

    @classmethod
    def _load_yaml(cls, path: str, what: str) -> JsonObject:
        try:
            with open(path, 'r') as f:
                return yaml.safe_load(f)
        except FileNotFoundError:
            raise CfgError(f'Could not find {what}')
        except yaml.YAMLError as e:
            raise CfgError(f'Could not parse {what}. {e}')

    @classmethod
    def _validate(cls, js: JsonObject, schema: JsonObject):
        try:
            validate(instance=js, schema=schema)
        except (ValueError, ValidationError, SchemaError) as e:
            raise CfgError('Could not validate defaults configuration. ' + getattr(e, 'message', str(e)))

        return True
