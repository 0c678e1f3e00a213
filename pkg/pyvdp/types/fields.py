# -*- coding: utf-8 -*-
"""Module grouping all classes related to pyvdp column definitions."""

#: Column sources.
SOURCES = ('input', 'solver', 'analytic', 'diagnostic')

#: Column datatypes.
DATATYPES = ('string', 'integer', 'float', 'boolean')


class AbstractField(dict):
    """Abstract base class for pyvdp column definitions. Not to be
    instantiated directly."""

    def __init__(self, name, source, datatype, **kwargs):
        """Initialise a field.

        Parameters
        ----------
        name : str
            Name of this column in the dataset.
        source : one of 'input', 'solver', 'analytic', 'diagnostic'
            Origin of the values of this column.
        datatype : one of 'string', 'integer', 'float' or 'boolean'
            Datatype of the values of this column.

        """
        if source not in SOURCES:
            raise ValueError("Unknown field source '{}'.".format(source))
        if datatype not in DATATYPES:
            raise ValueError("Unknown field datatype '{}'.".format(datatype))
        super(AbstractField, self).__init__(**kwargs)
        self.__setitem__('name', name)
        self.__setitem__('source', source)
        self.__setitem__('type', datatype)


class InputField(AbstractField):
    """Column repeating a parameter of the sweep point."""

    def __init__(self, name, datatype='float', definition=''):
        super(InputField, self).__init__(name, 'input', datatype)
        self.__setitem__('definition', definition)
        self.__setitem__('notnull', True)


class ResultField(AbstractField):
    """Column computed from the numerical solution of a sweep point."""

    def __init__(self, name, datatype='float', definition='',
                 notnull=False):
        """Initialise a result field.

        Parameters
        ----------
        name : str
            Name of this column in the dataset.
        datatype : one of 'string', 'integer', 'float' or 'boolean'
            Datatype of the values of this column.
        definition : str, optional
            Definition of this column.
        notnull : bool, optional, defaults to False
            True if this column has a value even for failed points.

        """
        super(ResultField, self).__init__(name, 'solver', datatype)
        self.__setitem__('definition', definition)
        self.__setitem__('notnull', notnull)


class OracleField(AbstractField):
    """Column with a closed-form prediction for the sweep point."""

    def __init__(self, name, datatype='float', definition=''):
        super(OracleField, self).__init__(name, 'analytic', datatype)
        self.__setitem__('definition', definition)
        self.__setitem__('notnull', False)


class DiagnosticField(AbstractField):
    """Column describing how a sweep point was solved."""

    def __init__(self, name, datatype='float', definition=''):
        super(DiagnosticField, self).__init__(name, 'diagnostic', datatype)
        self.__setitem__('definition', definition)
        self.__setitem__('notnull', False)
