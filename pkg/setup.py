from setuptools import setup, find_packages
import codecs
import tempocover as distmeta


CLASSIFIERS = [
    'Intended Audience :: Developers',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: BSD License',
    'Programming Language :: Python',
    'Topic :: Scientific/Engineering :: Mathematics',
    'Topic :: Software Development :: Libraries :: Python Modules',
    'Operating System :: OS Independent',
]

for ver in ['3', '3.9', '3.10', '3.11', '3.12']:
    CLASSIFIERS.append('Programming Language :: Python :: %s' % ver)


setup(
    name='tempocover',
    version='.'.join(map(str, distmeta.__version__)),
    author=distmeta.__author__,
    license='2-clause BSD',
    description="Temporal path covers of temporal digraphs.",
    long_description=codecs.open('README.rst', 'r', 'utf-8').read(),

    platforms=['any'],
    python_requires='>=3.9',
    install_requires=['django>=3.2', 'networkx>=3.2'],

    packages=find_packages(exclude=['tests', 'tests.*']),
    include_package_data=True,
    classifiers=CLASSIFIERS,
    entry_points={
        'console_scripts': ['tempocover = tempocover.cli:main'],
    },
    test_suite='tests',
)
