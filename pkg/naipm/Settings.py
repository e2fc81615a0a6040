# coding: utf-8
# Standard Python libraries
from pathlib import Path
import json

class Settings():
    """
    Class for handling saved solver defaults.
    """
    # Built-in values used when a setting has not been saved
    defaults = {
        'ban_length': 5,
        'eps': 1e-8,
        'max_it': 50,
        'step_damping': 0.99,
        'recenter_coefficient': 1.0,
    }

    def __init__(self, directory=None):
        """
        Class initializer. Calls load.

        Parameters
        ----------
        directory : str or Path, optional
            A settings directory to use instead of the default one.  When
            given, forwarding saved in the default location is ignored.
        """
        if directory is None:
            self.__fixeddirectory = None
        else:
            self.__fixeddirectory = Path(directory)
        self.load()

    @property
    def defaultdirectory(self):
        """pathlib.Path : Path to the default settings directory"""
        return Path(Path.home(), '.naipm')

    @property
    def defaultfilename(self):
        """pathlib.Path : Path to the default settings.json file"""
        return Path(self.defaultdirectory, 'settings.json')

    @property
    def directory(self):
        """pathlib.Path : Path to the settings directory"""
        return self.__directory

    @property
    def filename(self):
        """pathlib.Path : Path to the settings.json file"""
        return Path(self.directory, 'settings.json')

    def __value(self, name):
        return self.__content.get(name, self.defaults[name])

    @property
    def ban_length(self):
        """int : The default Ban length L."""
        return int(self.__value('ban_length'))

    @property
    def eps(self):
        """float : The default convergence tolerance."""
        return float(self.__value('eps'))

    @property
    def max_it(self):
        """int : The default iteration limit."""
        return int(self.__value('max_it'))

    @property
    def step_damping(self):
        """float : The default step damping factor."""
        return float(self.__value('step_damping'))

    @property
    def recenter_coefficient(self):
        """float : The default re-centering coefficient."""
        return float(self.__value('recenter_coefficient'))

    def asdict(self):
        """dict : Every setting with its current value."""
        return {name: getattr(self, name) for name in self.defaults}

    def load(self):
        """
        Loads the settings.json file.
        """
        if self.__fixeddirectory is not None:
            self.__defaultcontent = {}
            self.__directory = self.__fixeddirectory
            self.__content = self.__read(self.filename)
            return

        # Load settings.json from the default location
        self.__defaultcontent = self.__read(self.defaultfilename)

        # Check if forwarding_directory has been set
        if 'forwarding_directory' in self.__defaultcontent:
            self.__directory = Path(self.__defaultcontent['forwarding_directory'])
            self.__content = self.__read(self.filename)

            # Check for recursive forwarding
            if 'forwarding_directory' in self.__content:
                raise ValueError('Multi-level forwarding not allowed.')

        # If no forwarding, default is current content
        else:
            self.__content = self.__defaultcontent
            self.__directory = self.defaultdirectory

    @staticmethod
    def __read(filename):
        if filename.is_file():
            with open(filename, 'r') as f:
                return json.load(fp=f)
        return {}

    def save(self):
        """
        Saves current settings to settings.json.
        """
        if not self.directory.is_dir():
            self.directory.mkdir(parents=True)

        with open(self.filename, 'w') as f:
            json.dump(self.__content, fp=f, indent=4)

        # Reload
        self.load()

    def defaultsave(self):
        """
        Saves settings to the default settings.json.  Used by forwarding
        methods.
        """
        if not self.defaultdirectory.is_dir():
            self.defaultdirectory.mkdir(parents=True)

        with open(self.defaultfilename, 'w') as f:
            json.dump(self.__defaultcontent, fp=f, indent=4)

        # Reload
        self.load()

    def set(self, name, value):
        """
        Validates and saves one setting.

        Parameters
        ----------
        name : str
            One of ban_length, eps, max_it, step_damping and
            recenter_coefficient.
        value : int, float or str
            The new value.

        Raises
        ------
        KeyError
            If name is not a known setting.
        ValueError
            If value is out of range.
        """
        if name not in self.defaults:
            raise KeyError(f'unknown setting {name!r}')

        # The solver configuration owns the validation rules
        from .solver import SolverConfig
        config = SolverConfig(**{name: value})
        self.__content[name] = getattr(config, name)
        self.save()

    def unset(self, name):
        """
        Removes a saved setting so that its built-in default applies again.

        Parameters
        ----------
        name : str
            The setting to reset.
        """
        if name not in self.defaults:
            raise KeyError(f'unknown setting {name!r}')
        if name in self.__content:
            del self.__content[name]
            self.save()

    def set_directory(self, path):
        """
        Sets settings directory to a different location.

        Parameters
        ----------
        path : str or Path
            The path to the new settings directory where settings.json is to
            be located.
        """
        if self.__fixeddirectory is not None:
            raise ValueError('directory cannot be forwarded for explicitly located settings')
        extra = set(self.__defaultcontent) - {'forwarding_directory'}
        if len(extra) != 0:
            raise ValueError(f'directory cannot be changed if other settings exist in {self.defaultfilename}')

        self.__defaultcontent['forwarding_directory'] = Path(path).resolve().as_posix()

        # Save changes to default
        self.defaultsave()

    def unset_directory(self):
        """
        Resets settings directory information back to the default location.
        """
        if 'forwarding_directory' in self.__defaultcontent:
            del self.__defaultcontent['forwarding_directory']
            self.defaultsave()
