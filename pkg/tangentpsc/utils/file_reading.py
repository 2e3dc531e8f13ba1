import yaml
from fractions import Fraction
from pathlib import Path

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / 'config' / 'config_default.yml'


def load_config(config_file=DEFAULT_CONFIG_PATH) -> dict:
    with open(config_file, 'r') as file:
        return yaml.safe_load(file) or {}


def override_config(override_config_file=None, config_file=DEFAULT_CONFIG_PATH) -> dict:
    """
    Override the default configuration file with the override configuration file
    :param override_config_file: The override configuration file, None for the defaults only
    :param config_file: The default configuration file
    """

    def override_dict(config_dict, override_config_dict):
        for key, value in override_config_dict.items():
            if isinstance(value, dict):
                if key not in config_dict:
                    config_dict[key] = value
                else:
                    override_dict(config_dict[key], value)
            else:
                config_dict[key] = value
        return config_dict

    default_config_dict = load_config(config_file)
    if override_config_file is None or Path(override_config_file).resolve() == Path(config_file).resolve():
        return default_config_dict
    override_config_dict = load_config(override_config_file)
    return override_dict(default_config_dict, override_config_dict)


def config_rational(value) -> Fraction:
    """
    Read a rational config value. Strings such as '1/100' or '0.01' are parsed exactly.
    """
    if isinstance(value, float):
        # YAML floats are decimal literals, go through repr to keep them exact
        return Fraction(repr(value))
    return Fraction(value)
