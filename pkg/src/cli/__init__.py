"""
Command-line tool: convert, verify, random and bench subcommands.
"""
