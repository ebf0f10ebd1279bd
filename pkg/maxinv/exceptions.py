# Tokenizer exceptions
UNEXPECTED_CHARACTER = 'Unexpected character.'
UNEXPECTED_EOF = 'Unexpected EOF.'
NUMBER_NOT_ZERO = "Point number cannot start with '0'."

# Parser exceptions
EXPECT_POINTS = "Expect 'points:' line before generators."
DUPLICATE_POINTS = "Duplicate 'points:' line."
UNKNOWN_DIRECTIVE = "Unknown directive '%s'."
EXPECT_COLON = "Expect ':' after '%s'."
EXPECT_CYCLE = "Expect '(' to start a cycle."
UNTERMINATED_CYCLE = "Expect ')' to close cycle."
EXPECT_POINT = 'Expect point number.'
EXPECT_NEWLINE = 'Expect end of line.'
EXPECT_GENERATOR_NAME = "Expect generator name like 'g0'."
EXPECT_ARROW = "Expect '->' after generator name."
POINT_OUT_OF_RANGE = 'Point %d out of range for %d points.'
REPEATED_POINT = 'Point %d repeated in cycle notation.'

# Group exceptions
GROUP_TOO_LARGE = 'group too large: order exceeds cap %d'
INVALID_PERMUTATION = 'invalid permutation: %s'
DEGREE_MISMATCH = 'degree mismatch: expected %d points, got %d'
INVALID_ACTION = 'invalid action: not a homomorphism'
INVALID_AUTOMORPHISM = 'invalid automorphism: %s'
NOT_PRIME = '%d is not prime'
NOT_NORMAL = 'subgroup is not normal'
NOT_A_SUBGROUP = 'subgroup belongs to a different group'
UNKNOWN_ELEMENT = 'element %r is not in the group'
CONSTRAINT_VIOLATION = 'constructor constraint violated: %s'
AXIOM_VIOLATION = 'group axiom violated: %s'

# Action exceptions
ACTION_NOT_COPRIME = 'action not coprime: |A| = %d, |G| = %d'
ACTION_TOO_LARGE = 'action closure exceeds %d automorphisms'
UNKNOWN_GENERATOR = "unknown generator '%s'"
MISSING_GENERATOR = "automorphism does not give an image for '%s'"
IMAGE_NOT_IN_GROUP = "image of '%s' is not an element of the group"
NOT_INVARIANT = 'normal subgroup is not invariant under the action'


class GroupError(ValueError):
    pass


class ActionError(GroupError):
    pass
