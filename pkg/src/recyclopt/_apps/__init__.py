"""
Subcommand implementations.

Each public module ``<name>.py`` defines a function ``<name>(config, logger)``
returning the results echoed in the run manifest.

"""
