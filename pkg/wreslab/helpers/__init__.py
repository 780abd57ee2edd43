# Copyright 2023 Oliver Smith
# SPDX-License-Identifier: GPL-3.0-or-later
