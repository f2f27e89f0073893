from fractions import Fraction

from borelred.matrix import Matrix


def mat(rows):
    return Matrix([[Fraction(x) for x in row] for row in rows])


def vec(values):
    return [Fraction(x) for x in values]
