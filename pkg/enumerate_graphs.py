#!/usr/bin/env python3

"""
 Command line tool to enumerate graphs up to isomorphism, one graph6 line per class
"""

import logging
import sys

import hydra
from omegaconf import DictConfig

from bk_lab.commands import cmd_enumerate
from bk_lab.options import setup_logger

logger = logging.getLogger()
setup_logger(logger)


@hydra.main(config_path="conf", config_name="enumerate_graphs")
def main(cfg: DictConfig):
    logger.info("Enumerating n=%s alpha_max=%s", cfg.n, cfg.alpha_max)
    sys.exit(cmd_enumerate(cfg))


if __name__ == "__main__":
    main()
