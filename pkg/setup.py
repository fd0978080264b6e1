from setuptools import find_packages, setup

setup(
    name="zetaforms",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    install_requires=[
        "click>=8.1",
        "mpmath>=1.3",
        "numpy>=1.24",
        "pydantic>=2.5",
    ],
    extras_require={
        "dev": [
            "pytest",
        ],
    },
    entry_points={
        "console_scripts": [
            "zetaforms=zetaforms.integrations.cli:main",
        ],
    },
    python_requires=">=3.9",
    description=(
        "Construct, certify and verify hypergeometric linear forms in "
        "Hurwitz zeta values"
    ),
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
