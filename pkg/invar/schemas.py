#-----------------------------------------------------------------------
# schemas.py
#-----------------------------------------------------------------------

"""
JSON Schemas (draft 7) of the reports written by 'invar --format json'.
Polynomials are strings in the polynomial grammar; rationals are
strings such as "3/2".
"""

import jsonschema

from invar import errors

_POLY = {'type': 'string', 'minLength': 1}
_RATIONAL = {'type': 'string', 'pattern': r'^-?\d+(/\d+)?$'}

_IMAGES = {
    'type': 'object',
    'properties': {
        'images': {'type': 'object',
                   'patternProperties': {r'^[xc]\d+$': _POLY},
                   'additionalProperties': False},
        'bound': {'type': 'integer', 'minimum': 0},
    },
    'required': ['images'],
    'additionalProperties': False,
}

_PSI = {
    'type': 'object',
    'properties': {
        'bound': {'type': 'integer', 'minimum': 0},
        'rows': {'type': 'array',
                 'items': {'type': 'array', 'items': _RATIONAL}},
    },
    'required': ['bound', 'rows'],
}

_GENERATORS = {
    'type': 'array',
    'items': {'type': 'object',
              'properties': {'name': {'type': 'string'}, 'poly': _POLY},
              'required': ['name', 'poly']},
}

SCHEMAS = {
    'transform': {
        'type': 'object',
        'properties': {
            'transform': {'type': 'string'},
            'start': {'type': 'integer', 'minimum': 0},
            'terms': {'type': 'array', 'items': _RATIONAL, 'minItems': 1},
        },
        'required': ['transform', 'start', 'terms'],
    },
    'invariance': {
        'type': 'object',
        'properties': {
            'mode': {'enum': ['symbolic', 'numeric']},
            'verdict': {'enum': ['invariant', 'not-invariant',
                                 'inconclusive']},
            'terms': {'type': 'integer', 'minimum': 0},
            'samples': {'type': 'integer', 'minimum': 0},
            'target': {'type': ['string', 'null']},
            'candidate': {'type': ['string', 'null']},
            'witnesses': {'type': 'array'},
        },
        'required': ['mode', 'verdict', 'terms', 'witnesses'],
    },
    'log': {
        'type': 'object',
        'properties': {'transform': {'type': 'string'},
                       'derivation': _IMAGES},
        'required': ['transform', 'derivation'],
    },
    'intertwine': {
        'type': 'object',
        'properties': {'transform': {'type': 'string'},
                       'derivation': _IMAGES,
                       'psi': _PSI},
        'required': ['transform', 'derivation', 'psi'],
    },
    'kernel': {
        'type': 'object',
        'properties': {'derivation': _IMAGES, 'generators': _GENERATORS,
                       'localized': {'type': 'string'}},
        'required': ['derivation', 'generators', 'localized'],
    },
    'problem1': {
        'type': 'object',
        'properties': {
            'transform': {'type': 'string'},
            'derivation': _IMAGES,
            'psi': _PSI,
            'families': {
                'type': 'array',
                'items': {'type': 'object',
                          'properties': {'name': {'type': 'string'},
                                         'start': {'type': 'integer'},
                                         'terms': {'type': 'array',
                                                   'items': _POLY}},
                          'required': ['name', 'start', 'terms']},
            },
        },
        'required': ['derivation', 'psi', 'families'],
    },
    'problem2': {
        'type': 'object',
        'properties': {
            'family': {'type': 'string'},
            'ansatz_bound': {'type': 'integer', 'minimum': 0},
            'basis': {'type': 'array',
                      'items': {'type': 'object',
                                'properties': {'derivation': _IMAGES,
                                               'transformation': _IMAGES},
                                'required': ['derivation',
                                             'transformation']}},
        },
        'required': ['family', 'ansatz_bound', 'basis'],
    },
}

for _schema in SCHEMAS.values():
    jsonschema.Draft7Validator.check_schema(_schema)

#-----------------------------------------------------------------------

def validate(kind, obj):
    """
    Raise InvarError if obj does not match the schema of report kind.
    """
    try:
        jsonschema.Draft7Validator(SCHEMAS[kind]).validate(obj)
    except jsonschema.ValidationError as e:
        raise errors.InvarError('%s report does not match its schema: %s'
                                % (kind, e.message))
    return obj
