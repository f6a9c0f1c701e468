# -*- encoding: utf-8 -*-

from .cli import main  # noqa
