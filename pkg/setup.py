# coding: utf-8

from setuptools import setup, find_packages

NAME = "hermite-rays"
version = None
with open('hermite_rays/version.py') as f:
    exec(f.read())

# To install the library, run the following
#
# python setup.py install
#
# prerequisite: setuptools
# http://pypi.python.org/pypi/setuptools

# Dependencies are managed through environment.yml
REQUIRES = []

setup(
    name=NAME,
    version=version,
    description="Ray-method asymptotics of Hermite polynomials and their zeros",
    url="",
    keywords=["Hermite polynomials", "asymptotics", "Airy functions", "zeros"],
    install_requires=REQUIRES,
    packages=find_packages(exclude=['test', 'test.*']),
    package_data={'hermite_rays': ['resources/*.yaml']},
    include_package_data=True,
    entry_points={
        'console_scripts': ['hermite-rays=hermite_rays.cli:main']},
    long_description="""\
    Outer, Airy transition and oscillatory approximations of H_n(x), asymptotic
    routes to the zeros of H_n, and an overflow-safe exact oracle to check them against
    """
)
