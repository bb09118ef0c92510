#!/usr/bin/env python3

"""
 Command line tool to audit the neighbourhood colouring of a vertex against the structural predicates
"""

import logging
import sys

import hydra
from omegaconf import DictConfig, OmegaConf

from bk_lab.commands import cmd_audit
from bk_lab.options import setup_logger

logger = logging.getLogger()
setup_logger(logger)


@hydra.main(config_path="conf", config_name="audit_config")
def main(cfg: DictConfig):
    logger.info("CFG:")
    logger.info("%s", OmegaConf.to_yaml(cfg))
    sys.exit(cmd_audit(cfg))


if __name__ == "__main__":
    main()
