from setuptools import setup, find_packages

braid_garside_version = "0.1.0"

with open("README.md", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="braid-garside",
    version=braid_garside_version,
    description="Garside normal forms, super summit sets and conjugacy invariants of braid groups",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="MIT",
    python_requires=">=3.9",
    install_requires=[
        "aiostream>=0.4.3",
        "pescador>=2.1.0",
        "numpy",
        "tqdm",
    ],
    extras_require={"tests": ["pytest", "hypothesis"], "docs": ["pdoc3"]},
    entry_points={"console_scripts": ["braid-garside=braid_garside.cli:main"]},
    packages=find_packages(exclude=["tests"]),
    include_package_data=True,
    classifiers=[
        "Development Status :: 4 - Beta",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
