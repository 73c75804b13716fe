from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="flag-cohomology",
    version="0.1.0",
    author="AI6132 Group 19",
    description="Exact rational cohomology of flag varieties G/P via the Borel presentation",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "examples*"]),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    python_requires=">=3.9",
    install_requires=[
        "numpy>=1.24.0",
        "sympy>=1.12",
        "tqdm>=4.66.0",
        "pyyaml>=6.0",
    ],
    entry_points={
        "console_scripts": [
            "flagcoh=flag_cohomology.cli:main",
        ],
    },
)
