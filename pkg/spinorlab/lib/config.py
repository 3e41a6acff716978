# lib/config.py
import os
from dataclasses import asdict, dataclass, field, replace
import yaml
from dotenv import dotenv_values

from ..algebra.gamma import CHIRAL, REPRESENTATIONS
from .errors import DocumentError

DEFAULT_CONFIG_FILE = 'spinorlab.yml'
SUITES = ('fierz', 'hopf', 'projectors', 'mapping')

ENV_KEYS = {
    'SPINORLAB_TOLERANCE': ('tolerance', float),
    'SPINORLAB_REP': ('rep', str),
    'SPINORLAB_SEED': ('seed', int),
}

# YAML 1.1 reads 1e-10 as a string, so file values are cast explicitly
FILE_KEYS = {'tolerance': float, 'marginal_factor': float, 'rep': str, 'seed': int}


def _default_samples():
    return {'fierz': 1000, 'hopf': 500, 'projectors': 200, 'mapping': 1000}


@dataclass(frozen=True)
class Settings:
    tolerance: float = 1e-10
    marginal_factor: float = 10.0
    rep: str = CHIRAL
    seed: int = 0
    samples: dict = field(default_factory=_default_samples)

    def validate(self):
        if self.rep not in REPRESENTATIONS:
            raise DocumentError(f"(config.Settings) rep must be one of {REPRESENTATIONS}, got '{self.rep}'")
        if not self.tolerance > 0:
            raise DocumentError(f"(config.Settings) tolerance must be positive, got {self.tolerance}")
        if not self.marginal_factor > 1:
            raise DocumentError(f"(config.Settings) marginal_factor must exceed 1, got {self.marginal_factor}")
        unknown = set(self.samples) - set(SUITES)
        if unknown:
            raise DocumentError(f"(config.Settings) unknown sample suites: {', '.join(sorted(unknown))}")
        return self

    def samples_for(self, suite):
        return int(self.samples.get(suite, _default_samples()[suite]))

    def as_dict(self):
        return asdict(self)


def load_env_vars(env_file, overrides):
    """Load variables from an env file in the working directory and apply `-e` overrides."""
    dotenv_path = os.path.join(os.getcwd(), env_file) if env_file else None
    env_vars = {}
    if dotenv_path and os.path.exists(dotenv_path):
        env_vars.update(dotenv_values(dotenv_path))
    env_vars.update(overrides or {})
    return env_vars


def load_config_file(path, logger):
    """Settings mapping from a YAML file; a missing default file is not an error."""
    if path is None:
        path = os.path.join(os.getcwd(), DEFAULT_CONFIG_FILE)
        if not os.path.exists(path):
            logger.debug(f"(config.load_config_file) no {DEFAULT_CONFIG_FILE} found, using defaults")
            return {}
    try:
        with open(path, 'r') as f:
            document = yaml.safe_load(f) or {}
    except OSError as e:
        raise DocumentError(f"(config.load_config_file) cannot read config file {path}: {e}")
    except yaml.YAMLError as e:
        raise DocumentError(f"(config.load_config_file) invalid YAML in {path}: {e}")
    if not isinstance(document, dict):
        raise DocumentError(f"(config.load_config_file) {path} must hold a mapping")
    logger.debug(f"(config.load_config_file) loaded settings from {path}: {document}")
    return document


def _from_env(env_vars, logger):
    values = {}
    for key, (name, cast) in ENV_KEYS.items():
        raw = env_vars.get(key)
        if raw is None or raw == '':
            continue
        try:
            values[name] = cast(raw)
        except ValueError:
            raise DocumentError(f"(config.load_settings) {key} has an invalid value '{raw}'")
        logger.debug(f"(config.load_settings) {name} set from {key}={raw}")
    return values


def load_settings(logger, config_path=None, env_file='.env', env_overrides=None, cli_values=None):
    """
    Effective settings, applied in increasing precedence:
    defaults, YAML file, env file, `-e` overrides, explicit CLI flags.
    """
    settings = Settings()
    document = load_config_file(config_path, logger)
    samples = dict(settings.samples)
    samples.update(document.pop('samples', None) or {})
    known = {}
    for name, cast in FILE_KEYS.items():
        if name in document:
            try:
                known[name] = cast(document[name])
            except (TypeError, ValueError):
                raise DocumentError(f"(config.load_settings) setting '{name}' has an invalid value {document[name]!r}")
    for name in set(document) - set(known):
        logger.warning(f"(config.load_settings) ignoring unknown setting '{name}'")
    settings = replace(settings, samples=samples, **known)

    file_vars = load_env_vars(env_file, {})
    settings = replace(settings, **_from_env(file_vars, logger))
    settings = replace(settings, **_from_env(env_overrides or {}, logger))

    explicit = {name: value for name, value in (cli_values or {}).items() if value is not None}
    if 'samples' in explicit:
        samples = dict(settings.samples)
        samples.update(explicit.pop('samples'))
        explicit['samples'] = samples
    settings = replace(settings, **explicit)
    return settings.validate()
