#!/usr/bin/env python3
"""
Logger, seed and worker setup shared by the hydra tools
"""

import logging
import os
import random

import numpy as np
from omegaconf import DictConfig

logger = logging.getLogger()

JOBS_ENV = "BK_LAB_JOBS"


def set_seed(cfg: DictConfig):
    seed = cfg.seed
    random.seed(seed)
    np.random.seed(seed)


def setup_cfg_jobs(cfg: DictConfig) -> DictConfig:
    """
    Resolves the worker count: explicit jobs=, then the BK_LAB_JOBS environment variable, then all CPUs
    """
    jobs = cfg.jobs
    if jobs is None:
        env = os.environ.get(JOBS_ENV)
        jobs = int(env) if env else (os.cpu_count() or 1)
    jobs = int(jobs)
    if jobs < 1:
        raise ValueError("Invalid jobs parameter: {}, should be >= 1".format(jobs))
    cfg.jobs = jobs
    logger.info("Using %d worker processes", jobs)
    return cfg


def setup_logger(logger):
    logger.setLevel(logging.INFO)
    if logger.hasHandlers():
        logger.handlers.clear()
    log_formatter = logging.Formatter("[%(thread)s] %(asctime)s [%(levelname)s] %(name)s: %(message)s")
    console = logging.StreamHandler()
    console.setFormatter(log_formatter)
    logger.addHandler(console)
