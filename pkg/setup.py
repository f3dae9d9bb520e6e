# Lint as: python3
""" biext computes morphism groups of Deligne 1-motives, biextension pairings and their realizations, exactly.

Note:

    VERSION needs to be formatted following the MAJOR.MINOR.PATCH convention

To create the package for pypi.

1. Change the version in:
    - src/biext/__init__.py
    - setup.py

2. Commit these changes: "git commit -m 'Release: VERSION'"

3. Add a tag in git to mark the release: "git tag VERSION -m 'Add tag VERSION for pypi'"
    Push the tag to remote: git push --tags origin main

4. Build both the sources and the wheel: "python setup.py sdist bdist_wheel"

5. Check the upload on the pypi test server, then upload to pypi with twine.

6. Change the version in __init__.py and setup.py to X.X.X+1.dev0 (e.g. VERSION=0.1.0 -> 0.1.1.dev0).
"""
from setuptools import find_packages, setup


__version__ = "0.1.0.dev0"  # expected format is one of x.y.z.dev0, or x.y.z.rc1 or x.y.z (no to dashes, yes to dots)

REQUIRED_PKGS = [
    "dataclasses_json",  # For configuration, reports and motive files
    "numpy>=1.18",  # Object arrays for exact matrices, random generators for instances
    "sympy>=1.13",  # Rationals, integer normal forms and factorization
]

TESTS_REQUIRE = [
    "pytest",
    "pytest-xdist",
    "hypothesis",  # Property-based tests of the exact arithmetic
]

QUALITY_REQUIRE = ["black~=22.0", "flake8>=3.8.3", "isort>=5.0.0", "pyyaml>=5.3.1"]

EXTRAS_REQUIRE = {
    "dev": TESTS_REQUIRE + QUALITY_REQUIRE,
    "test": TESTS_REQUIRE,
    "quality": QUALITY_REQUIRE,
}


setup(
    name="biext",
    version=__version__,
    description="Exact Hom lattices, biextensions and realizations of 1-motives over imaginary quadratic fields",
    long_description=open("README.md", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    author="The biext Authors",
    license="Apache 2.0",
    package_dir={"": "src"},
    packages=find_packages("src"),
    include_package_data=True,
    install_requires=REQUIRED_PKGS,
    extras_require=EXTRAS_REQUIRE,
    entry_points={"console_scripts": ["biext = biext.cli.commands:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="mixed hodge structures 1-motives biextensions lattices exact arithmetic",
    zip_safe=False,
    python_requires=">=3.9",
)
