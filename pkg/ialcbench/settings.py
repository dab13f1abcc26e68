# Library-wide settings of ialcbench. Values are read at call time, so changing an entry affects later calls.
settings = {
    # Fixture tests re-raise reasoner exceptions when True; when False the failure is logged and the fixture gets
    # the ERROR verdict.
    "CRASH_EARLY": False,
    # Largest entity count find_countermodel accepts.
    "COUNTERMODEL_CAP": 4,
    # Largest depth prove_bounded accepts.
    "PROOF_DEPTH_CAP": 12,
    # Largest world count sdl_find_model accepts.
    "SDL_WORLD_CAP": 4,
    # Prefix of the nominals invented by proof search (y0, y1, ...).
    "FRESH_PREFIX": "y",
}
