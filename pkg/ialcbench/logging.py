import logging


# Logging levels, in decreasing verbosity.
ALL = logging.NOTSET + 1
VERBOSE = logging.DEBUG
INFO = logging.INFO
NO_LOGGING = logging.CRITICAL + 1

LEVEL_NAMES = {
    "all": ALL,
    "verbose": VERBOSE,
    "info": INFO,
    "warning": logging.WARNING,
    "none": NO_LOGGING,
}


def logger():
    """
    Return the ialcbench logger, configuring it on first use.

    Messages are prefixed with the emitting component, e.g. ``"find_countermodel : ..."``.
    """
    log_obj = logging.getLogger("ialcbench")
    if not getattr(logger, "_logger_ready", False):
        logger._logger_ready = True
        _set_logger(log_obj)
    return log_obj


def set_logging_level(level=INFO):
    """
    Set the ialcbench logging level.

    Parameters
    ----------
    level : int or str
        One of the module level constants, or a key of `LEVEL_NAMES`.
    """
    if isinstance(level, str):
        try:
            level = LEVEL_NAMES[level.lower()]
        except KeyError:
            raise ValueError(
                f"unknown logging level {level!r}; expected one of {sorted(LEVEL_NAMES)}"
            ) from None
    logger().setLevel(level)


def _set_logger(log_obj):
    # Warnings and above go to stderr even when the host application never configured logging.
    logging.basicConfig(
        format="%(asctime)s %(name)-12s %(levelname)-8s %(message)s",
        datefmt="%m-%d-%y %H:%M",
        level=logging.WARNING,
    )
    log_obj.setLevel(logging.WARNING)
