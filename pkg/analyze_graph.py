#!/usr/bin/env python3

"""
 Command line tool to compute structural parameters, chromatic number and the bound of graph6 graphs
"""

import logging
import sys

import hydra
from omegaconf import DictConfig, OmegaConf

from bk_lab.commands import cmd_analyze
from bk_lab.options import setup_logger

logger = logging.getLogger()
setup_logger(logger)


@hydra.main(config_path="conf", config_name="analyze_graph")
def main(cfg: DictConfig):
    logger.info("CFG:")
    logger.info("%s", OmegaConf.to_yaml(cfg))
    sys.exit(cmd_analyze(cfg))


if __name__ == "__main__":
    main()
