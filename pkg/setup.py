#!/usr/bin/env python3

from setuptools import find_packages, setup

with open("README.md") as f:
    readme = f.read()

setup(
    name="bk_lab",
    version="1.0.0",
    description="Graph colouring workbench for the max(omega, Delta - 1) bound on 4K1-free graphs",
    classifiers=[
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.7",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    long_description=readme,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests"]),
    python_requires=">=3.7",
    setup_requires=[
        "setuptools>=18.0",
    ],
    install_requires=[
        "filelock",
        "numpy>=1.17",
        "regex",
        "tqdm>=4.27",
        "hydra-core>=1.0.0",
        "omegaconf>=2.0.1",
        "jsonlines",
    ],
    extras_require={
        "tests": [
            "pytest",
            "hypothesis",
            "networkx",
        ],
    },
)
