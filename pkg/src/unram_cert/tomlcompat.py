try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

loads = tomllib.loads
load = tomllib.load
TOMLDecodeError = tomllib.TOMLDecodeError
