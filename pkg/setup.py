from setuptools import setup, find_packages

setup(
    name="eqos_package",
    version="0.1.0",
    description="Equivariant Orlik-Solomon algebras of real hyperplane arrangements over GF(2)",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    package_data={"eqos_package": ["fixtures/*"]},
    python_requires=">=3.9",
    install_requires=[
        "numpy",
        "pydantic>=2",
        "python-dotenv>=1.0.0",
        "tqdm",
    ],
    extras_require={"test": ["pytest"]},
    entry_points={"console_scripts": ["eqos = eqos_package.main:main"]},
)
