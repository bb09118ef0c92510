#!/usr/bin/env python3

"""
 Command line tool to colour a graph with the exact solver, DSATUR, the Brooks construction or bk_color
"""

import logging
import sys

import hydra
from omegaconf import DictConfig, OmegaConf

from bk_lab.commands import cmd_color
from bk_lab.options import setup_logger

logger = logging.getLogger()
setup_logger(logger)


@hydra.main(config_path="conf", config_name="color_graph")
def main(cfg: DictConfig):
    logger.info("CFG:")
    logger.info("%s", OmegaConf.to_yaml(cfg))
    sys.exit(cmd_color(cfg))


if __name__ == "__main__":
    main()
