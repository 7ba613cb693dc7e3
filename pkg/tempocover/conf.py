"""
Settings, kept on :data:`django.conf.settings`.

Outside a Django project :func:`configure` sets Django up with
:data:`DEFAULTS`, overridden by ``TEMPOCOVER_<NAME>`` environment
variables. Inside one, the project's settings module may define any of
these names; missing ones fall back to :data:`DEFAULTS`.
"""
import os

import django
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

ENVIRON_PREFIX = 'TEMPOCOVER_'

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {'format': '%(levelname)s %(name)s %(message)s'},
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'tempocover': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
    },
}

DEFAULTS = {
    'DEBUG': False,
    # Largest vertex count the brute-force oracles accept.
    'ORACLE_MAX_N': 12,
    # Total number of DP table entries a single solve may create.
    'DP_STATE_BUDGET': 200000,
    # Cap on visits per vertex in the XP path-cover DP; None means n.
    'DP_MULTIPLICITY_CAP': None,
    # {(problem, graph_class): method} overrides for the 'auto' method.
    'SOLVER_ROUTES': {},
    'LOGGING': LOGGING,
}


def _parse_int(name, value, allow_none=False):
    if allow_none and value in (None, '', 'none', 'None'):
        return None
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ImproperlyConfigured("If set, %s must be an integer (got %r instead)"
                                   % (name, value))
    if value < 1:
        raise ImproperlyConfigured("If set, %s must be positive (got %r instead)"
                                   % (name, value))
    return value


def _parse_bool(name, value):
    if isinstance(value, bool):
        return value
    if str(value).lower() in ('1', 'true', 'yes', 'on'):
        return True
    if str(value).lower() in ('0', 'false', 'no', 'off', ''):
        return False
    raise ImproperlyConfigured("If set, %s must be a boolean (got %r instead)"
                               % (name, value))


_PARSERS = {
    'DEBUG': _parse_bool,
    'ORACLE_MAX_N': _parse_int,
    'DP_STATE_BUDGET': _parse_int,
    'DP_MULTIPLICITY_CAP': lambda name, value: _parse_int(name, value, allow_none=True),
}


def environ_overrides(environ=None):
    """ Parsed ``TEMPOCOVER_<NAME>`` values found in `environ` (default ``os.environ``). """
    if environ is None:
        environ = os.environ
    values = {}
    for name, parse in _PARSERS.items():
        raw = environ.get(ENVIRON_PREFIX + name)
        if raw is not None:
            values[name] = parse(name, raw)
    return values


def configure(environ=None, **options):
    """
    Configures Django with :data:`DEFAULTS`, the environment and `options`
    unless settings are already configured or come from
    ``DJANGO_SETTINGS_MODULE``.
    """
    if settings.configured or os.environ.get('DJANGO_SETTINGS_MODULE'):
        return
    values = dict(DEFAULTS)
    values.update(environ_overrides(environ))
    for name, value in options.items():
        if not name.isupper():
            raise ImproperlyConfigured("Setting names must be upper-case (got %r)" % name)
        values[name] = _PARSERS[name](name, value) if name in _PARSERS else value
    settings.configure(**values)
    django.setup()


def setting(name):
    """ The validated value of the setting `name`. """
    if not settings.configured:
        configure()
    value = getattr(settings, name, DEFAULTS[name])
    if name in _PARSERS:
        value = _PARSERS[name](name, value)
    return value
