import os
from typing import Any

import yaml

from algebra.field_context import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_FIELD_SIZE,
    DEFAULT_MAX_PARTITION_LENGTH,
    DEFAULT_MAX_PERIOD_TERMS,
    DEFAULT_MAX_PRECISION,
    DEFAULT_MAX_Q,
    Limits,
)
from lib.arguments import Arguments
from lib.log.log_level import LogLevel
from lib.log.logger import Logger
from lib.log.output_format import OutputFormat

CONFIG_FILE = ".drinfeld-ss.yaml"
CACHE_DIR_ENV = "DRINFELD_SS_CACHE_DIR"
DEFAULT_CACHE_DIR = os.path.join("~", ".cache", "drinfeld-ss")
DEFAULT_SEED = 1729
DEFAULT_RANDOM_SAMPLES = 20

# keys holding a positive integer, with their defaults
POSITIVE_INT_KEYS: dict[str, int] = {
    "random_samples": DEFAULT_RANDOM_SAMPLES,
    "max_q": DEFAULT_MAX_Q,
    "max_degree": DEFAULT_MAX_DEGREE,
    "max_field_size": DEFAULT_MAX_FIELD_SIZE,
    "max_partition_length": DEFAULT_MAX_PARTITION_LENGTH,
    "max_period_terms": DEFAULT_MAX_PERIOD_TERMS,
    "max_precision": DEFAULT_MAX_PRECISION,
}


class Config:
    """Configuration holder for drinfeld-ss"""

    def __init__(self) -> None:
        self.log_level: LogLevel = LogLevel.INFO
        self.output_format: OutputFormat = OutputFormat.TEXT
        self.cache_dir: str = os.path.expanduser(DEFAULT_CACHE_DIR)
        self.use_cache: bool = True
        self.seed: int = DEFAULT_SEED
        self.random_samples: int = DEFAULT_RANDOM_SAMPLES
        self.max_q: int = DEFAULT_MAX_Q
        self.max_degree: int = DEFAULT_MAX_DEGREE
        self.max_field_size: int = DEFAULT_MAX_FIELD_SIZE
        self.max_partition_length: int = DEFAULT_MAX_PARTITION_LENGTH
        self.max_period_terms: int = DEFAULT_MAX_PERIOD_TERMS
        self.max_precision: int = DEFAULT_MAX_PRECISION

    def limits(self) -> Limits:
        return Limits(
            max_q=self.max_q,
            max_degree=self.max_degree,
            max_field_size=self.max_field_size,
            max_partition_length=self.max_partition_length,
            max_period_terms=self.max_period_terms,
            max_precision=self.max_precision,
        )


def load_config(logger: Logger, args: Arguments) -> Config:
    """
    Load configuration from :
    - config file argument if provided
    - .drinfeld-ss.yaml in the current directory
    - default config if no config file found
    """
    config_file = None
    if args.config_file:
        logger.log(LogLevel.DEBUG, f"Using config file from argument: '{args.config_file}'")
        config_file = args.config_file
    else:
        current_dir_config_file = os.path.join(os.getcwd(), CONFIG_FILE)
        if os.path.isfile(current_dir_config_file):
            config_file = current_dir_config_file
        else:
            logger.log(LogLevel.DEBUG, f"No {CONFIG_FILE} in the current directory, using defaults")

    return _load_config_file(args, logger, config_file)


def _load_config_file(args: Arguments, logger: Logger, config_path: str | None) -> Config:
    """Load configuration from a YAML file, then apply command line overrides"""
    config_obj = Config()
    config: dict[str, Any] = {}

    if config_path is not None and os.path.exists(config_path):
        try:
            with open(config_path, "r") as f:
                config_loaded = yaml.safe_load(f)
            if isinstance(config_loaded, dict):
                config = config_loaded
                logger.log(LogLevel.DEBUG, f"Loaded config file: {config_path}")
            elif config_loaded is None:
                logger.log(LogLevel.DEBUG, f"Config file '{config_path}' is empty; using default settings.")
            else:
                logger.log(LogLevel.WARNING, f"Config file '{config_path}' is not a valid YAML dictionary.")
        except (OSError, yaml.YAMLError) as e:
            logger.log(LogLevel.WARNING, f"Failed to load config file '{config_path}': {e}")

    _update_config_from_dict(args, config_obj, config, logger)
    return config_obj


def _update_config_from_dict(args: Arguments, config_obj: Config, config: dict[str, Any], logger: Logger) -> None:
    """Update Config from the file dictionary; command line values take precedence"""
    if args.log_level is not None:
        logger.log(LogLevel.DEBUG, f"Log level from arguments ({args.log_level}) takes precedence over config file")
        config_obj.log_level = args.log_level
    elif isinstance(config.get("log_level"), str) and LogLevel.is_valid_string(config["log_level"]):
        config_obj.log_level = LogLevel.from_string(config["log_level"])
        logger.log(LogLevel.DEBUG, f"Log level set to {config_obj.log_level} from config file")
    logger.set_level(config_obj.log_level)

    if args.output_format is not None:
        logger.log(LogLevel.DEBUG, f"Output format from arguments ({args.output_format.value}) takes precedence")
        config_obj.output_format = args.output_format
    elif isinstance(config.get("output_format"), str) and OutputFormat.is_valid_string(config["output_format"]):
        config_obj.output_format = OutputFormat.from_string(config["output_format"])
        logger.log(LogLevel.DEBUG, f"Output format set to {config_obj.output_format.value} from config file")
    logger.set_format(config_obj.output_format)

    # flag > environment > config file > default
    if args.cache_dir is not None:
        logger.log(LogLevel.DEBUG, f"Cache directory from arguments: {args.cache_dir}")
        config_obj.cache_dir = args.cache_dir
    elif os.environ.get(CACHE_DIR_ENV):
        config_obj.cache_dir = os.environ[CACHE_DIR_ENV]
        logger.log(LogLevel.DEBUG, f"Cache directory from {CACHE_DIR_ENV}: {config_obj.cache_dir}")
    elif isinstance(config.get("cache_dir"), str):
        config_obj.cache_dir = os.path.expanduser(config["cache_dir"])
        logger.log(LogLevel.DEBUG, f"Cache directory set to {config_obj.cache_dir} from config file")

    if args.use_cache is not None:
        config_obj.use_cache = args.use_cache
    elif isinstance(config.get("use_cache"), bool):
        config_obj.use_cache = config["use_cache"]
        logger.log(LogLevel.DEBUG, f"Cache use set to {config_obj.use_cache} from config file")

    if args.seed is not None:
        logger.log(LogLevel.DEBUG, f"Seed from arguments ({args.seed}) takes precedence over config file")
        config_obj.seed = args.seed
    elif isinstance(config.get("seed"), int) and not isinstance(config["seed"], bool):
        config_obj.seed = config["seed"]
        logger.log(LogLevel.DEBUG, f"Seed set to {config_obj.seed} from config file")

    for key in POSITIVE_INT_KEYS:
        if key not in config:
            continue
        value = config[key]
        if isinstance(value, int) and not isinstance(value, bool) and value > 0:
            setattr(config_obj, key, value)
            logger.log(LogLevel.DEBUG, f"{key} set to {value} from config file")
        else:
            logger.log(LogLevel.WARNING, f"Ignoring {key}: expected a positive integer, got {value!r}")
