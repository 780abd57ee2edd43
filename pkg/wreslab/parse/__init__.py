# Copyright 2023 Oliver Smith
# SPDX-License-Identifier: GPL-3.0-or-later
from wreslab.parse.arguments import arguments, get_parser
from wreslab.parse.symbolfile import load_jet, load_nerve, load_symbol, save_symbol
