package fx;

public class AlunoDAO {

    public Aluno buscar(String id) {
        Aluno a = new Aluno();
        a.setNome(id);
        return a;
    }
}
