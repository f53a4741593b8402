from setuptools import setup, find_packages


NAME = "apw"
DESCRIPTION = (
    "Anti-powers in fixed points of uniform substitutions"
)
LONG_DESCRIPTION = DESCRIPTION


setup(
    name=NAME,
    description=DESCRIPTION,
    long_description=LONG_DESCRIPTION,
    packages=find_packages("src"),
    include_package_data=True,
    package_dir={"apw": "src/apw"},
    install_requires=[
        "click>=7",
        "toml",
        "numpy>=1.17"
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Operating System :: POSIX :: Linux",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "License :: OSI Approved :: MIT License"
    ],
    python_requires=">=3.8",
    entry_points={
        "console_scripts": [
            "apw = apw.scripts.apw:cli"
        ]
    },
    command_options={
        "build_sphinx": {
            "project": ("setup.py", NAME),
            "source_dir": ("setup.py", "docs")
        }
    },
    use_scm_version=True,
    setup_requires=["setuptools_scm", "sphinx", "sphinxcontrib-apidoc"],
    extras_require={
        "sphinx": ["sphinxcontrib-apidoc"]
    },

)
