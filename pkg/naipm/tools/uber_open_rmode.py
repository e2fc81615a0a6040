# coding: utf-8
# Standard Python libraries
from io import BytesIO
from pathlib import Path

class uber_open_rmode():
    """
    Context manager giving a binary read handle for problem files, whether
    they are passed as paths, open files, bytes or JSON text.
    """
    def __init__(self, data):
        """
        Initialize context manager.

        Parameters
        ----------
        data : path-like, file-like object, bytes or str
            A str is taken as a path if a file of that name exists, else as
            the content itself.
        """
        self.data = data

    def __enter__(self):
        data = self.data
        self.to_close = True

        if hasattr(data, 'read'):
            self.open_file = data
            self.to_close = False
        elif isinstance(data, Path):
            self.open_file = open(data, 'rb')
        elif isinstance(data, bytes):
            self.open_file = BytesIO(data)
        elif self.__isfile(data):
            self.open_file = open(data, 'rb')
        else:
            self.open_file = BytesIO(str(data).encode('utf-8'))

        return self.open_file

    @staticmethod
    def __isfile(data):
        try:
            return Path(data).is_file()
        except (OSError, ValueError):
            return False

    def __exit__(self, *args):
        if self.to_close:
            self.open_file.close()
