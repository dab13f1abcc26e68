import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="ialcbench",
    version="0.1.0",
    author="",
    author_email="",
    description="Reasoning and fixture benchmarking toolkit for the intuitionistic description logic iALC and SDL",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "examples*"]),
    package_data={
        "ialcbench.corpus": [
            "manifest.txt",
            "models/*.ikm",
            "models/*.stm",
            "proofs/*.ipf",
            "sequents/*.seq",
            "sdl/*.sdt",
            "sdl/*.sds",
        ]
    },
    install_requires=[
        "numpy>=1.16.2",
        "scipy>=1.2.1",
        "pandas>=0.24.2",
        "sciunit",
        "overrides<4",
        "lark>=1.0",
    ],
    extras_require={"test": ["hypothesis"]},
    entry_points={"console_scripts": ["ialcbench=ialcbench.cli:main"]},
    python_requires=">=3.8",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Natural Language :: English",
        "Topic :: Scientific/Engineering",
    ],
)
