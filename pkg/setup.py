from setuptools import setup

with open('README.md', 'r') as fp:
    long_description = fp.read()


setup(
    name = 'Maxinv',
    version = '0.1.0',
    description = 'Maximal invariant subgroups under coprime actions: exhaustive checks on small finite groups',
    long_description = long_description,
    long_description_content_type = 'text/markdown',
    author = 'Maxinv developers',
    packages = ['maxinv'],
    license = 'License :: OSI Approved :: MIT License',
    python_requires = '>=3.10',
    install_requires = [
        'numpy>=1.23',
        'sympy>=1.11',
    ],
    extras_require = {
        'test': ['pytest>=7'],
    },
    entry_points = {
        'console_scripts': [
            'maxinv=maxinv.__main__:main',
        ],
    },
)
