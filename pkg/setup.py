import os
import sys

import setuptools

ROOT = os.path.dirname(__file__)

if sys.version_info < (3, 9, 0):
    sys.exit("Python 3.9.0 is the minimum required version for building this package")

with open(os.path.join(ROOT, "README.md")) as f:
    long_description = f.read()

with open(os.path.join(ROOT, "version.txt")) as f:
    version = f.read().strip()

setuptools.setup(
    name="kg-factor",
    version=version,
    description="Klein-Gordon factorization harness: pair, Schrodinger and z-marched solvers on periodic grids",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="Apache License 2.0",
    packages=setuptools.find_packages("kg-factor", exclude=["tests", "tests.*"]),
    package_dir={"": "kg-factor"},
    install_requires=["numpy>=1.22",
                      "scipy>=1.8",
                      "python-json-logger>=2.0",
                      "sentry-sdk>=1.5",
                      "smart-open>=6.1.0",
                      "dpath>=2.0.6,<2.1"],
    entry_points={
        'console_scripts': [
            'kg_factor = harness.cli:main',
        ],
    },
    include_package_data=True,
    python_requires=">=3.9.0",
    classifiers=[
        "Development Status :: 3 - Alpha",
        'License :: OSI Approved :: Apache Software License',
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
