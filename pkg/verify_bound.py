#!/usr/bin/env python3

"""
 Command line tool to run a verification campaign of chi <= max(Delta-1, omega) over enumerated or sampled
 graphs, or to verify an external graph6 stream (input=...)
"""

import logging
import sys

import hydra
from omegaconf import DictConfig, OmegaConf

from bk_lab.commands import cmd_verify
from bk_lab.options import set_seed, setup_cfg_jobs, setup_logger

logger = logging.getLogger()
setup_logger(logger)


@hydra.main(config_path="conf", config_name="verify_bound")
def main(cfg: DictConfig):
    try:
        cfg = setup_cfg_jobs(cfg)
    except ValueError as e:
        logger.error("%s", e)
        sys.exit(1)
    set_seed(cfg)

    logger.info("CFG (after jobs configuration):")
    logger.info("%s", OmegaConf.to_yaml(cfg))
    sys.exit(cmd_verify(cfg))


if __name__ == "__main__":
    main()
