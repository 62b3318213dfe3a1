""" Run configuration read from ``indexlab.cfg``.

The file is an INI file with a ``[run]`` and a ``[reproduce]`` section::

    [run]
    mode = auto
    seed = 0
    trials = 3
    box = 1000000000
    format = json
    max_symbolic_dim = 64
    max_symbolic_vars = 8
    samples = 100

    [reproduce]
    max_n =

It is looked up in order: an explicit path, ``$INDEXLAB_CONFIG``,
``./indexlab.cfg``. ``$INDEXLAB_SEED`` overrides the file's seed; command
line flags override both.

"""
from collections import OrderedDict
import logging
import os

from six.moves.configparser import ConfigParser
from six.moves.configparser import Error as ConfigParserError

from indexlab import ConfigError
from indexlab.exactlinalg import (
    DEFAULT_BOX, DEFAULT_TRIALS, MAX_SYMBOLIC_DIM, MAX_SYMBOLIC_VARS, MIN_BOX)
from indexlab.gnib import AUTO, MODES, IndexOptions
from indexlab.utils import FORMATS

logger = logging.getLogger(__name__)

FILENAME = 'indexlab.cfg'
CONFIG_ENV = 'INDEXLAB_CONFIG'
SEED_ENV = 'INDEXLAB_SEED'


class RunConfig(object):
    """ Settings shared by every command. """

    def __init__(self):
        self.filename = None
        self.run = OrderedDict((
            ('mode', AUTO),
            ('seed', 0),
            ('trials', DEFAULT_TRIALS),
            ('box', DEFAULT_BOX),
            ('format', 'json'),
            ('max_symbolic_dim', MAX_SYMBOLIC_DIM),
            ('max_symbolic_vars', MAX_SYMBOLIC_VARS),
            ('samples', 100),
        ))
        self.reproduce = OrderedDict((
            ('max_n', None),
        ))

    def __getattr__(self, key):
        for section in ('run', 'reproduce'):
            values = self.__dict__.get(section, {})
            if key in values:
                return values[key]
        raise AttributeError(key)

    def update(self, **values):
        """ Override settings; None values are ignored. """
        for key, value in values.items():
            if value is None:
                continue
            if key in self.run:
                self.run[key] = value
            elif key in self.reproduce:
                self.reproduce[key] = value
            else:
                raise ConfigError("Unknown setting %r." % key)
        return self.validate()

    def validate(self):
        if self.mode not in MODES:
            raise ConfigError("mode must be one of %s, got %r."
                              % (', '.join(MODES), self.mode))
        if self.format not in FORMATS:
            raise ConfigError("format must be one of %s, got %r."
                              % (', '.join(FORMATS), self.format))
        if self.trials < 1:
            raise ConfigError("trials must be at least 1, got %d." % self.trials)
        if self.box < MIN_BOX:
            raise ConfigError("box must be at least %d, got %d." % (MIN_BOX, self.box))
        for key in ('max_symbolic_dim', 'max_symbolic_vars', 'samples'):
            if self.run[key] < 1:
                raise ConfigError("%s must be positive, got %d." % (key, self.run[key]))
        if self.max_n is not None and self.max_n < 1:
            raise ConfigError("max_n must be positive, got %d." % self.max_n)
        return self

    def options(self):
        return IndexOptions(mode=self.mode, seed=self.seed, trials=self.trials,
                            box=self.box, max_dim=self.max_symbolic_dim,
                            max_vars=self.max_symbolic_vars)

    def load(self, filename):
        parser = ConfigParser()
        try:
            read_ok = parser.read([filename])
        except ConfigParserError as e:
            raise ConfigError("Cannot parse %s: %s" % (filename, e))
        if not read_ok:
            raise ConfigError("Cannot read configuration file %s." % filename)

        for name, values in (('run', self.run), ('reproduce', self.reproduce)):
            if not parser.has_section(name):
                continue
            for key, text in parser.items(name):
                if key not in values:
                    raise ConfigError("Unknown setting %r in [%s] of %s."
                                      % (key, name, filename))
                values[key] = _parse(key, text.strip())
        self.filename = filename
        logger.info("configuration read from %s", filename)
        return self

    def to_dict(self):
        return {'run': dict(self.run), 'reproduce': dict(self.reproduce)}


def _parse(key, text):
    if key in ('mode', 'format'):
        return text
    if not text:
        return None
    try:
        return int(text)
    except ValueError:
        raise ConfigError("%s must be an integer, got %r." % (key, text))


def find_config(path=None, environ=None):
    """ The configuration file to read, or None for built-in defaults. """
    environ = os.environ if environ is None else environ
    if path:
        return path
    if environ.get(CONFIG_ENV):
        return environ[CONFIG_ENV]
    if os.path.isfile(FILENAME):
        return FILENAME
    return None


def load_config(path=None, environ=None):
    """ Defaults, then the configuration file, then ``$INDEXLAB_SEED``. """
    environ = os.environ if environ is None else environ
    config = RunConfig()
    filename = find_config(path, environ)
    if filename is not None:
        config.load(filename)

    seed = environ.get(SEED_ENV)
    if seed:
        try:
            config.run['seed'] = int(seed)
        except ValueError:
            raise ConfigError("%s must be an integer, got %r." % (SEED_ENV, seed))
    return config.validate()
